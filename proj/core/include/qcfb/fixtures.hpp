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

#pragma once

// Published controllers shipped as JSON data files, used to verify the
// evaluation pipeline end to end.

#include <filesystem>
#include <optional>
#include <string>

#include "qcfb/scenario.hpp"

namespace qcfb {

struct PublishedFixture {
  ScenarioId id = ScenarioId::A;
  std::string description;
  ControllerRealization controller;
  /// Matrices printed alongside the controller that are derivable from it.
  std::optional<Matrix> printed_bk1;
  std::optional<Matrix> printed_b21;
  double expected_j = 0.0;
  /// Reported at full precision; unreachable from 8-decimal inputs.
  double reported_k = 0.0;
  double j_tolerance = 0.0;
  double k_tolerance = 0.0;
};

std::string fixture_file_name(ScenarioId id);

/// Parses one fixture file. Throws std::runtime_error with the path on I/O or
/// schema errors.
PublishedFixture load_fixture(const std::filesystem::path& path);

/// Loads fixture_file_name(id) from dir.
PublishedFixture published_fixture(ScenarioId id, const std::filesystem::path& dir);

}  // namespace qcfb
