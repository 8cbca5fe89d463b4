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

// Orchestration behind the command-line tool: fixture verification,
// single optimization runs written to disk, and ablation tables.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qcfb/experiment.hpp"
#include "qcfb/fixtures.hpp"
#include "qcfb/results.hpp"

namespace qcfb {

struct FixtureCheck {
  ScenarioId id = ScenarioId::A;
  EvaluationResult measured;
  double expected_j = 0.0;
  double reported_k = 0.0;
  double j_tolerance = 0.0;
  double k_tolerance = 0.0;
  /// Largest entrywise gap between a derived matrix and its printed value,
  /// relative to max(1, largest printed entry).
  std::optional<double> bk1_gap;
  std::optional<double> b21_gap;

  bool j_ok() const;
  bool k_ok() const;
  bool h_ok() const { return measured.h > 0.0; }
  /// Derived matrices agree with the printed ones up to round-off.
  bool printed_ok() const;
  bool pass() const { return j_ok() && k_ok() && h_ok() && printed_ok(); }
};

struct VerifyReport {
  std::vector<FixtureCheck> checks;
  bool pass() const;
};

/// Evaluates each shipped fixture at rho = 0. Throws std::runtime_error when a
/// fixture file is missing or corrupt.
VerifyReport run_verify(const std::filesystem::path& fixture_dir);
void print_verify_report(std::ostream& out, const VerifyReport& report);

struct RunArtifacts {
  OptimizationResult result;
  nlohmann::json result_json;
  std::filesystem::path result_path;
  std::filesystem::path trace_path;
};

/// Optimizes cfg's scenario with cfg.de and the given seed, then writes
/// result.json and trace.csv into out_dir (created if needed).
RunArtifacts run_and_write(const ExperimentConfig& cfg, std::uint64_t seed,
                           const std::filesystem::path& out_dir,
                           const RoundObserver& observer = {});

struct AblationRow {
  AblationVariant variant;
  std::uint64_t seed = 0;
  EvaluationResult best;
  double wall_seconds = 0.0;
  std::int64_t evaluations = 0;
};

/// Resolves the scenario C config for one ablation row under a budget preset.
ExperimentConfig ablation_config(int row, const std::string& budget, RangeSpace space);

/// Runs one ablation row. When out_dir is given, its artifacts go to
/// out_dir/row_<row>.
AblationRow run_ablation_row(int row, const std::string& budget, std::uint64_t seed,
                             RangeSpace space,
                             const std::optional<std::filesystem::path>& out_dir = std::nullopt);

inline constexpr const char* kAblationHeader =
    "row,variant,seed,performance_index,constraint_k,feasible,wall_seconds,evaluations";

void write_ablation_csv(std::ostream& out, const std::vector<AblationRow>& rows);
nlohmann::json ablation_to_json(const std::vector<AblationRow>& rows);

}  // namespace qcfb
