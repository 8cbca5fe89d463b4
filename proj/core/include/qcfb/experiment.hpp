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

// Experiment configuration: a JSON document naming a scenario, optional
// budget preset and ablation row, and explicit DE overrides.
//
//   {
//     "scenario": "A",
//     "seeds": [1, 2, 3],
//     "output_dir": "runs/a",
//     "budget": "desk",
//     "ablation_row": 0,
//     "range_space": "scaled",
//     "de": { "alpha": 10, "rounds": 10, ... }
//   }
//
// Resolution order for the DE settings: library defaults, scenario defaults
// (alpha, rounds), budget preset, ablation row, then the "de" object. The
// run seed is the first entry of "seeds" unless "de.seed" is given.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcfb/de.hpp"
#include "qcfb/scenario.hpp"

namespace qcfb {

/// Space in which a fixed search range [-c, c] from the ablation table is read.
enum class RangeSpace { Scaled, Unscaled };

const char* to_string(RangeSpace space);

/// Equality tolerance standing in for strict feasibility rules.
inline constexpr double kStrictDelta = 1e-12;

struct BudgetPreset {
  std::string name;
  std::optional<int> rounds;
  std::int64_t max_gen = 0;
  std::int64_t stagnation_cap = 0;
  std::optional<int> bet_runs;
  std::optional<int> bet_iters;
};

/// "full" (300000 / 60000 generations, scenario rounds), "desk" (10 rounds,
/// 20000 / 5000) and "smoke" (3 rounds, 300 / 100, short bet-and-run).
BudgetPreset budget_preset(const std::string& name);
void apply_budget(const BudgetPreset& preset, DEConfig& cfg);

/// One row of the ablation grid on scenario C.
struct AblationVariant {
  int row = 0;
  bool strict_feasibility = false;
  PenaltyMode penalty = PenaltyMode::Scheduled;
  double fixed_rho = 0.0;
  double alpha = 1000.0;
  RangeMode range = RangeMode::Adaptive;
  double range_half_width = 0.0;  // as listed in the table, see RangeSpace

  std::string label() const;
};

inline constexpr int kAblationRows = 11;

/// Rows 0-10. Throws ConfigurationError outside that range.
AblationVariant ablation_variant(int row);
void apply_ablation(const AblationVariant& variant, RangeSpace space, DEConfig& cfg);

struct ExperimentConfig {
  ScenarioId scenario = ScenarioId::A;
  DEConfig de;  // fully resolved
  std::vector<std::uint64_t> seeds;
  std::string output_dir;
  std::optional<std::string> budget;
  std::optional<int> ablation_row;
  RangeSpace range_space = RangeSpace::Scaled;

  bool operator==(const ExperimentConfig&) const = default;
};

/// Rejects unknown keys and invalid values with ConfigurationError.
ExperimentConfig parse_experiment_config(const nlohmann::json& doc);
/// Writes every resolved DE field, so parsing the output reproduces the config.
nlohmann::json to_json(const ExperimentConfig& cfg);
/// Reads and parses a config file. I/O problems raise std::runtime_error.
ExperimentConfig load_experiment_config(const std::string& path);

nlohmann::json de_config_to_json(const DEConfig& cfg);

}  // namespace qcfb
