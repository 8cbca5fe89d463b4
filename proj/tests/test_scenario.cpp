// Copyright 2026 The qcfb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "qcfb/errors.hpp"
#include "qcfb/fixtures.hpp"
#include "qcfb/matrix_io.hpp"
#include "qcfb/scenario.hpp"

namespace qcfb {
namespace {

PublishedFixture fixture(ScenarioId id) { return published_fixture(id, QCFB_TEST_FIXTURE_DIR); }

TEST(Plant, AtomCavityMatricesAndRealizability) {
  const PlantModel p = build_atom_cavity_plant();
  Matrix a(2, 2);
  a << 0.0, 0.1, -0.1, 0.0;
  EXPECT_EQ(p.A, a);
  EXPECT_DOUBLE_EQ(p.C(0, 0), 0.2);
  EXPECT_DOUBLE_EQ(p.B(1, 1), -0.2);
  EXPECT_EQ(p.n_w(), 4);
  EXPECT_TRUE(plant_pr_check(p, 1e-9));
}

TEST(Scenario, LayoutSizesAndDefaults) {
  const auto a = make_scenario(ScenarioId::A);
  const auto b = make_scenario(ScenarioId::B);
  const auto c = make_scenario(ScenarioId::C);
  EXPECT_EQ(a.layout.size(), 16);
  EXPECT_EQ(b.layout.size(), 20);
  EXPECT_EQ(c.layout.size(), 24);
  EXPECT_EQ(a.coupling, Coupling::Indirect);
  EXPECT_EQ(b.coupling, Coupling::DirectIndirect);
  EXPECT_EQ(c.coupling, Coupling::DirectIndirectSqueezed);
  EXPECT_EQ(a.defaults.alpha, 10.0);
  EXPECT_EQ(a.defaults.rounds, 20);
  EXPECT_EQ(b.defaults.alpha, 10.0);
  EXPECT_EQ(c.defaults.alpha, 1000.0);
  EXPECT_EQ(c.defaults.rounds, 30);
  EXPECT_TRUE(c.layout.contains("squeezing"));
  EXPECT_FALSE(a.layout.contains("B_12"));
  EXPECT_THROW(a.layout.slice("B_12"), std::out_of_range);
}

TEST(Scenario, ParseIds) {
  EXPECT_EQ(parse_scenario_id("a"), ScenarioId::A);
  EXPECT_EQ(parse_scenario_id("C"), ScenarioId::C);
  EXPECT_THROW(parse_scenario_id("D"), ConfigurationError);
}

TEST(Decode, ZeroVectorGivesZeroController) {
  const auto spec = make_scenario(ScenarioId::A);
  const auto k = decode(Vector::Zero(16), spec);
  EXPECT_EQ(k.a_k(), Matrix::Zero(2, 2));
  EXPECT_EQ(k.b_k1(), Matrix::Zero(2, 2));
  EXPECT_EQ(pr_residual(k).k, 0.0);
}

TEST(Decode, LayoutReadBack) {
  const auto spec = make_scenario(ScenarioId::A);
  Vector u = Vector::Zero(16);
  u(0) = 1.0;
  u(3) = 1.0;
  const auto k = decode(u, spec);
  EXPECT_EQ(k.a_k(), Matrix::Identity(2, 2));
  EXPECT_EQ(k.c_k(), Matrix::Zero(2, 2));
  EXPECT_EQ(k.b_k2(), Matrix::Zero(2, 2));
  EXPECT_EQ(k.b_ky(), Matrix::Zero(2, 2));
}

TEST(Decode, RejectsWrongLength) {
  EXPECT_THROW(decode(Vector::Zero(17), make_scenario(ScenarioId::A)), ConfigurationError);
}

TEST(Decode, SqueezingIsSaturated) {
  const auto spec = make_scenario(ScenarioId::C);
  Vector u = Vector::Zero(24);
  u.tail(4) << 50.0, -50.0, 0.3, -0.3;
  const auto sq = *decode(u, spec).squeezers();
  EXPECT_DOUBLE_EQ(sq.r_u, std::log(10.0));
  EXPECT_DOUBLE_EQ(sq.r_y, -std::log(10.0));
  EXPECT_DOUBLE_EQ(sq.r_wk1, 0.3);
  EXPECT_DOUBLE_EQ(sq.r_wk2, -0.3);
}

TEST(Decode, EncodeDecodeIsIdentityOnFixtures) {
  for (ScenarioId id : {ScenarioId::A, ScenarioId::B, ScenarioId::C}) {
    const auto spec = make_scenario(id);
    const PublishedFixture fx = fixture(id);
    const Vector u = encode(fx.controller, spec);
    const auto back = decode(u, spec);
    EXPECT_EQ(back.a_k(), fx.controller.a_k());
    EXPECT_EQ(back.c_k(), fx.controller.c_k());
    EXPECT_EQ(back.b_k1(), fx.controller.b_k1());
    EXPECT_EQ(back.b_k2(), fx.controller.b_k2());
    EXPECT_EQ(back.b_ky(), fx.controller.b_ky());
    EXPECT_EQ(back.b_12(), fx.controller.b_12());
    EXPECT_EQ(back.squeezers(), fx.controller.squeezers());
    EXPECT_EQ(encode(back, spec), u);
  }
}

TEST(Fixtures, PrintedEntries) {
  EXPECT_EQ(fixture(ScenarioId::A).controller.a_k()(0, 0), -0.16276908);
  const PublishedFixture c = fixture(ScenarioId::C);
  EXPECT_EQ((*c.controller.b_12())(0, 0), -1.44522297e4);
  const Matrix s_u = c.controller.squeezers()->s_u();
  EXPECT_NEAR(s_u(0, 0), 10.0, 1e-12);
  EXPECT_NEAR(s_u(1, 1), 0.1, 1e-12);
  EXPECT_NEAR(2.06297180 * 0.48473760, 1.0, 1e-6);
  EXPECT_EQ(c.expected_j, 2.0000403964);
}

TEST(Fixtures, PrintedDerivedMatricesMatchExactly) {
  const PublishedFixture a = fixture(ScenarioId::A);
  ASSERT_TRUE(a.printed_bk1);
  EXPECT_EQ(a.controller.b_k1(), *a.printed_bk1);
  const PublishedFixture c = fixture(ScenarioId::C);
  ASSERT_TRUE(c.printed_bk1 && c.printed_b21);
  EXPECT_EQ(c.controller.b_k1(), *c.printed_bk1);
  EXPECT_EQ(*c.controller.b_21(), *c.printed_b21);
}

TEST(Fixtures, ScenarioBCouplingRecoveredFromPrintedB21) {
  const PublishedFixture b = fixture(ScenarioId::B);
  Matrix expected(2, 2);
  expected << 123.09708858, -104.92638339, 91.84663595, 26.77010958;
  EXPECT_TRUE(b.controller.b_12()->isApprox(expected, 1e-15));
}

TEST(Fixtures, MissingOrCorruptFilesReportThePath) {
  try {
    load_fixture("/nonexistent/scenario_a.json");
    FAIL() << "expected an exception";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/scenario_a.json"), std::string::npos);
  }
  const auto path = std::filesystem::temp_directory_path() / "qcfb_corrupt_fixture.json";
  std::ofstream(path) << "{ not json";
  EXPECT_THROW(load_fixture(path), std::runtime_error);
  std::filesystem::remove(path);
}

TEST(MatrixIo, RoundTripAndValidation) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> n(0.0, 1e3);
  Matrix m(3, 2);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = n(rng);
  const auto j = matrix_to_json(m);
  EXPECT_EQ(j["data"][0][1].get<double>(), m(0, 1));
  EXPECT_EQ(matrix_from_json(nlohmann::json::parse(j.dump())), m);
  auto ragged = j;
  ragged["data"][1] = {1.0};
  EXPECT_THROW(matrix_from_json(ragged), DimensionError);
  auto wrong = j;
  wrong["rows"] = 4;
  EXPECT_THROW(matrix_from_json(wrong), DimensionError);
}

}  // namespace
}  // namespace qcfb
