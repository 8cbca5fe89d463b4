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

#include "qcfb/fixtures.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qcfb/matrix_io.hpp"

namespace qcfb {

std::string fixture_file_name(ScenarioId id) {
  return std::string("scenario_") + static_cast<char>('a' + static_cast<int>(id)) + ".json";
}

namespace {

SqueezerSet squeezers_from_json(const nlohmann::json& j) {
  auto r = [&](const char* key) {
    const Matrix s = matrix_from_json(j.at(key));
    if (s.rows() != 2 || s.cols() != 2 || s(0, 1) != 0.0 || s(1, 0) != 0.0) {
      throw DimensionError(std::string(key) + " must be a 2x2 diagonal matrix");
    }
    return SqueezerSet::parameter_from_diagonal(s(0, 0), s(1, 1));
  };
  return SqueezerSet{r("S_u"), r("S_y"), r("S_wK1"), r("S_wK2")};
}

PublishedFixture parse_fixture(const nlohmann::json& doc) {
  if (doc.at("format_version").get<int>() != 1) {
    throw std::runtime_error("unsupported fixture format_version");
  }
  const ScenarioId id = parse_scenario_id(doc.at("scenario").get<std::string>());
  const auto theta_k = CommutationMatrix::canonical(make_scenario(id).plant.n());
  const auto& c = doc.at("controller");

  std::optional<Matrix> b_12;
  if (c.contains("B_12")) {
    b_12 = matrix_from_json(c.at("B_12"));
  } else if (c.contains("B_21")) {
    b_12 = invert_b21_to_b12(matrix_from_json(c.at("B_21")), theta_k);
  }
  std::optional<SqueezerSet> squeezers;
  if (c.contains("squeezers")) squeezers = squeezers_from_json(c.at("squeezers"));

  const auto& e = doc.at("expected");
  PublishedFixture f{
      .id = id,
      .description = doc.value("description", ""),
      .controller = ControllerRealization::build(
          matrix_from_json(c.at("A_K")), matrix_from_json(c.at("C_K")),
          matrix_from_json(c.at("B_K2")), matrix_from_json(c.at("B_Ky")), theta_k,
          std::move(b_12), squeezers),
      .printed_bk1 = std::nullopt,
      .printed_b21 = std::nullopt,
      .expected_j = e.at("j_inf").get<double>(),
      .reported_k = e.at("k").get<double>(),
      .j_tolerance = e.at("j_tolerance").get<double>(),
      .k_tolerance = e.at("k_tolerance").get<double>(),
  };
  if (doc.contains("printed")) {
    const auto& p = doc.at("printed");
    if (p.contains("B_K1")) f.printed_bk1 = matrix_from_json(p.at("B_K1"));
    if (p.contains("B_21")) f.printed_b21 = matrix_from_json(p.at("B_21"));
  }
  return f;
}

}  // namespace

PublishedFixture load_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path.string());
  try {
    return parse_fixture(nlohmann::json::parse(in));
  } catch (const std::exception& e) {
    throw std::runtime_error("corrupt fixture " + path.string() + ": " + e.what());
  }
}

PublishedFixture published_fixture(ScenarioId id, const std::filesystem::path& dir) {
  return load_fixture(dir / fixture_file_name(id));
}

}  // namespace qcfb
