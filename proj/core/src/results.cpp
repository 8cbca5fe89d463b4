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

#include "qcfb/results.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qcfb/matrix_io.hpp"

namespace qcfb {

using Json = nlohmann::json;

Json evaluation_to_json(const EvaluationResult& e) {
  return Json{{"j_inf", e.j_inf},
              {"h", e.h},
              {"k", e.k},
              {"violation", e.violation},
              {"fitness", e.fitness},
              {"stable", e.stable},
              {"spectral_abscissa", e.spectral_abscissa},
              {"feasible", e.feasible()}};
}

Json controller_to_json(const ControllerRealization& ctrl) {
  Json out{{"A_K", matrix_to_json(ctrl.a_k())},   {"B_K1", matrix_to_json(ctrl.b_k1())},
           {"B_K2", matrix_to_json(ctrl.b_k2())}, {"B_Ky", matrix_to_json(ctrl.b_ky())},
           {"C_K", matrix_to_json(ctrl.c_k())},   {"Theta_K", matrix_to_json(ctrl.theta_k().matrix())}};
  if (ctrl.b_12()) {
    out["B_12"] = matrix_to_json(*ctrl.b_12());
    out["B_21"] = matrix_to_json(*ctrl.b_21());
  }
  if (const auto& s = ctrl.squeezers()) {
    out["squeezers"] = Json{{"r_u", s->r_u},
                            {"r_y", s->r_y},
                            {"r_wk1", s->r_wk1},
                            {"r_wk2", s->r_wk2},
                            {"S_u", matrix_to_json(s->s_u())},
                            {"S_y", matrix_to_json(s->s_y())},
                            {"S_wK1", matrix_to_json(s->s_wk1())},
                            {"S_wK2", matrix_to_json(s->s_wk2())}};
  }
  return out;
}

Json result_to_json(const OptimizationResult& result, const ExperimentConfig& cfg,
                    std::uint64_t seed) {
  Json rounds = Json::array();
  for (const auto& r : result.trace.rounds) {
    rounds.push_back(Json{{"round", r.round},
                          {"rho", r.rho},
                          {"generations", r.generations},
                          {"stagnated", r.stagnated},
                          {"best", evaluation_to_json(r.best)}});
  }
  ExperimentConfig echo = cfg;
  echo.de.seed = seed;
  echo.seeds = {seed};
  return Json{{"format_version", kResultFormatVersion},
              {"scenario", to_string(cfg.scenario)},
              {"seed", seed},
              {"decision",
               Json{{"scaled", vector_to_json(result.trace.best_scaled)},
                    {"unscaled", vector_to_json(result.decision)}}},
              {"bet_and_run_seed", vector_to_json(result.trace.bet_and_run_seed)},
              {"controller", controller_to_json(result.controller)},
              {"evaluation", evaluation_to_json(result.evaluation)},
              {"evaluations", result.trace.evaluations},
              {"rounds", std::move(rounds)},
              {"config", to_json(echo)}};
}

StoredController stored_controller_from_json(const Json& result) {
  const Json& c = result.at("controller");
  StoredController s{matrix_from_json(c.at("A_K")),  matrix_from_json(c.at("B_K1")),
                     matrix_from_json(c.at("B_K2")), matrix_from_json(c.at("B_Ky")),
                     matrix_from_json(c.at("C_K")),  matrix_from_json(c.at("Theta_K")),
                     std::nullopt,                   std::nullopt};
  if (c.contains("B_12")) s.b_12 = matrix_from_json(c.at("B_12"));
  if (c.contains("B_21")) s.b_21 = matrix_from_json(c.at("B_21"));
  return s;
}

void write_trace_csv(std::ostream& out, const std::vector<GenerationRecord>& records) {
  out << kTraceHeader << '\n' << std::setprecision(17);
  for (const auto& r : records) {
    out << r.round << ',' << r.generation << ',' << r.best_fitness << ',' << r.best_j << ','
        << r.best_k << ',' << r.best_h << ',' << r.best_violation << ',' << r.evals << '\n';
  }
}

std::vector<GenerationRecord> read_trace_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kTraceHeader) {
    throw std::runtime_error("trace csv: missing or unexpected header");
  }
  std::vector<GenerationRecord> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (cells.size() != 8) {
      throw std::runtime_error("trace csv: line " + std::to_string(line_no) + " has " +
                               std::to_string(cells.size()) + " fields");
    }
    try {
      out.push_back(GenerationRecord{std::stoi(cells[0]), std::stoll(cells[1]),
                                     std::stod(cells[2]), std::stod(cells[3]),
                                     std::stod(cells[4]), std::stod(cells[5]),
                                     std::stod(cells[6]), std::stoll(cells[7])});
    } catch (const std::logic_error&) {
      throw std::runtime_error("trace csv: malformed number on line " + std::to_string(line_no));
    }
  }
  return out;
}

void write_json_file(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << doc.dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing " + path);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error(path + " is not valid JSON: " + e.what());
  }
}

}  // namespace qcfb
