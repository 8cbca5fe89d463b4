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

// Serialized run artifacts: result.json (final controller, evaluation,
// per-round summaries, config echo) and trace.csv (one row per recorded
// generation).

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcfb/experiment.hpp"
#include "qcfb/optimizer.hpp"

namespace qcfb {

inline constexpr int kResultFormatVersion = 1;

nlohmann::json evaluation_to_json(const EvaluationResult& e);
nlohmann::json controller_to_json(const ControllerRealization& ctrl);

/// Everything needed to re-evaluate or re-derive the final controller.
nlohmann::json result_to_json(const OptimizationResult& result, const ExperimentConfig& cfg,
                              std::uint64_t seed);

/// Matrices stored under "controller" in a result document.
struct StoredController {
  Matrix a_k, b_k1, b_k2, b_ky, c_k, theta_k;
  std::optional<Matrix> b_12, b_21;
};

StoredController stored_controller_from_json(const nlohmann::json& result);

inline constexpr const char* kTraceHeader =
    "round,generation,best_fitness,best_j,best_k,best_h,best_violation,evals";

void write_trace_csv(std::ostream& out, const std::vector<GenerationRecord>& records);
std::vector<GenerationRecord> read_trace_csv(std::istream& in);

/// Writes doc with two-space indentation. Throws std::runtime_error on I/O failure.
void write_json_file(const std::string& path, const nlohmann::json& doc);
nlohmann::json read_json_file(const std::string& path);

}  // namespace qcfb
