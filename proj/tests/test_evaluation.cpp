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
#include <random>

#include <gtest/gtest.h>

#include "kronecker_lyapunov.hpp"
#include "qcfb/errors.hpp"
#include "qcfb/evaluation.hpp"
#include "qcfb/fixtures.hpp"
#include "qcfb/lyapunov.hpp"

namespace qcfb {
namespace {

PublishedFixture fixture(ScenarioId id) { return published_fixture(id, QCFB_TEST_FIXTURE_DIR); }

TEST(Violation, Examples) {
  EXPECT_EQ(violation(1e-6, 0.01, 1e-6, 0.01), 0.0);
  EXPECT_DOUBLE_EQ(violation(-1.0, 0.0, 1e-6, 0.01), 1.000001);
  EXPECT_DOUBLE_EQ(violation(1.0, 0.02, 1e-6, 0.01), 0.01);
}

TEST(Fitness, Examples) {
  EXPECT_EQ(fitness(3.25, 0.0, 1e10), 3.25);
  EXPECT_DOUBLE_EQ(fitness(2.0, 0.01, 100.0), 3.0);
  EXPECT_DOUBLE_EQ(fitness(4.08013169, 7.66610068e-20, 1e10), 4.08013169 + 7.66610068e-10);
}

TEST(Fitness, MonotoneInResidual) {
  double previous = fitness(1.0, 0.0, 10.0);
  for (double k = 1e-6; k < 10.0; k *= 3.0) {
    const double f = fitness(1.0, k, 10.0);
    EXPECT_GE(f, previous);
    previous = f;
  }
}

TEST(JInfinity, TraceOfPaddedIdentity) {
  ClosedLoopSystem cl;
  cl.A = -Matrix::Identity(4, 4);
  cl.C = Matrix::Zero(2, 4);
  cl.C.leftCols(2) = Matrix::Identity(2, 2);
  EXPECT_DOUBLE_EQ(j_infinity(cl, Matrix::Identity(4, 4)), 2.0);
}

// Reference values below were computed with numpy/scipy from the fixture files
// (scipy.linalg.solve_continuous_lyapunov, numpy.linalg.eigvals).
struct FixtureReference {
  ScenarioId id;
  double j_inf;
  double abscissa;
};

class FixtureEvaluation : public ::testing::TestWithParam<FixtureReference> {};

TEST_P(FixtureEvaluation, MatchesIndependentComputation) {
  const FixtureReference ref = GetParam();
  const PublishedFixture fx = fixture(ref.id);
  const ScenarioSpec spec = make_scenario(ref.id);
  const EvaluationResult e = evaluate_controller(fx.controller, spec.plant, spec.coupling, 0.0);
  EXPECT_TRUE(e.stable);
  EXPECT_TRUE(e.feasible());
  EXPECT_NEAR(e.j_inf, ref.j_inf, 1e-8 * ref.j_inf);
  EXPECT_NEAR(e.spectral_abscissa, ref.abscissa, 1e-3 * std::abs(ref.abscissa));
  EXPECT_LE(std::abs(e.j_inf - fx.expected_j), fx.j_tolerance);
  EXPECT_LE(e.k, fx.k_tolerance);
  EXPECT_GT(e.h, 0.0);
  EXPECT_EQ(e.fitness, e.j_inf);
}

INSTANTIATE_TEST_SUITE_P(
    Published, FixtureEvaluation,
    ::testing::Values(FixtureReference{ScenarioId::A, 4.080131690730851, -0.024516552522889895},
                      FixtureReference{ScenarioId::B, 2.006461874006587, -4.651},
                      FixtureReference{ScenarioId::C, 2.0000404137976835, -486.8}),
    [](const auto& info) { return std::string(to_string(info.param.id)); });

TEST(Evaluate, ScenarioAFixtureThroughDecisionVector) {
  const ScenarioSpec spec = make_scenario(ScenarioId::A);
  const Vector u = encode(fixture(ScenarioId::A).controller, spec);
  ASSERT_EQ(u.size(), 16);
  const EvaluationResult e = evaluate(u, spec, 1e10);
  EXPECT_TRUE(e.stable);
  EXPECT_NEAR(e.j_inf, 4.0801, 1e-4);
  EXPECT_EQ(e.violation, 0.0);
  EXPECT_DOUBLE_EQ(e.fitness, e.j_inf + 1e10 * e.k);
}

TEST(Evaluate, ZeroDecisionIsUnstableSentinel) {
  const ScenarioSpec spec = make_scenario(ScenarioId::A);
  const EvaluationResult e = evaluate(Vector::Zero(16), spec, 5.0);
  EXPECT_FALSE(e.stable);
  EXPECT_EQ(e.j_inf, kUnstableObjective);
  EXPECT_EQ(e.h, -1.0);
  EXPECT_EQ(e.k, 0.0);
  EXPECT_GE(e.violation, kInfeasibilityFloor);
  EXPECT_FALSE(e.feasible());
}

TEST(Evaluate, LessUnstableRanksAhead) {
  const ScenarioSpec spec = make_scenario(ScenarioId::A);
  Vector mild = Vector::Zero(16);
  Vector wild = Vector::Zero(16);
  mild(0) = mild(3) = 0.5;  // A_K = 0.5 I
  wild(0) = wild(3) = 5.0;
  EXPECT_LT(evaluate(mild, spec, 1.0).violation, evaluate(wild, spec, 1.0).violation);
}

TEST(Evaluate, ZeroPenaltyGivesObjectiveExactly) {
  const ScenarioSpec spec = make_scenario(ScenarioId::B);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    Vector x(20);
    for (auto& v : x) v = u(rng);
    const EvaluationResult e = evaluate(x, spec, 0.0);
    EXPECT_EQ(e.fitness, e.j_inf);
  }
}

TEST(Evaluate, IsDeterministic) {
  const ScenarioSpec spec = make_scenario(ScenarioId::C);
  const Vector x = encode(fixture(ScenarioId::C).controller, spec);
  const EvaluationResult a = evaluate(x, spec, 3.0);
  const EvaluationResult b = evaluate(x, spec, 3.0);
  EXPECT_EQ(a.j_inf, b.j_inf);
  EXPECT_EQ(a.h, b.h);
  EXPECT_EQ(a.k, b.k);
  EXPECT_EQ(a.fitness, b.fitness);
}

TEST(Evaluate, FeasibleResultsSatisfyBothBounds) {
  const ScenarioSpec spec = make_scenario(ScenarioId::A);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int t = 0; t < 2000; ++t) {
    Vector x(16);
    for (auto& v : x) v = u(rng);
    const EvaluationResult e = evaluate(x, spec, 1.0);
    if (!e.stable) EXPECT_GE(e.violation, kInfeasibilityFloor);
    if (e.feasible()) {
      EXPECT_GT(e.h, 0.0);
      EXPECT_LE(e.k, kDefaultDelta);
    }
  }
}

TEST(Evaluate, LengthMismatchThrows) {
  EXPECT_THROW(evaluate(Vector::Zero(15), make_scenario(ScenarioId::A), 1.0), ConfigurationError);
}

}  // namespace
}  // namespace qcfb
