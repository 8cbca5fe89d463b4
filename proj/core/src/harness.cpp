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

#include "qcfb/harness.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>

namespace qcfb {

namespace fs = std::filesystem;

namespace {

double max_gap(const Matrix& derived, const Matrix& printed) {
  if (derived.rows() != printed.rows() || derived.cols() != printed.cols()) {
    return std::numeric_limits<double>::infinity();
  }
  const double scale = std::max(1.0, printed.cwiseAbs().maxCoeff());
  return (derived - printed).cwiseAbs().maxCoeff() / scale;
}

}  // namespace

bool FixtureCheck::j_ok() const { return std::abs(measured.j_inf - expected_j) <= j_tolerance; }

bool FixtureCheck::k_ok() const { return measured.k <= k_tolerance; }

bool FixtureCheck::printed_ok() const {
  auto ok = [](const std::optional<double>& gap) { return !gap || *gap <= 1e-12; };
  return ok(bk1_gap) && ok(b21_gap);
}

bool VerifyReport::pass() const {
  if (checks.empty()) return false;
  for (const auto& c : checks) {
    if (!c.pass()) return false;
  }
  return true;
}

VerifyReport run_verify(const fs::path& fixture_dir) {
  VerifyReport report;
  for (ScenarioId id : {ScenarioId::A, ScenarioId::B, ScenarioId::C}) {
    const PublishedFixture fx = published_fixture(id, fixture_dir);
    const ScenarioSpec spec = make_scenario(id);
    FixtureCheck check;
    check.id = id;
    check.measured = evaluate_controller(fx.controller, spec.plant, spec.coupling, 0.0);
    check.expected_j = fx.expected_j;
    check.reported_k = fx.reported_k;
    check.j_tolerance = fx.j_tolerance;
    check.k_tolerance = fx.k_tolerance;
    if (fx.printed_bk1) check.bk1_gap = max_gap(fx.controller.b_k1(), *fx.printed_bk1);
    if (fx.printed_b21 && fx.controller.b_21()) {
      check.b21_gap = max_gap(*fx.controller.b_21(), *fx.printed_b21);
    }
    report.checks.push_back(check);
  }
  return report;
}

void print_verify_report(std::ostream& out, const VerifyReport& report) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  for (const auto& c : report.checks) {
    out << "fixture " << to_string(c.id) << ": " << (c.pass() ? "PASS" : "FAIL") << '\n'
        << std::setprecision(10) << "  J_inf     measured " << c.measured.j_inf << "  expected "
        << c.expected_j << "  tolerance " << c.j_tolerance << (c.j_ok() ? "  ok" : "  FAIL")
        << '\n'
        << std::setprecision(3) << std::scientific << "  k         measured " << c.measured.k
        << "  bound " << c.k_tolerance << "  reported " << c.reported_k
        << (c.k_ok() ? "  ok" : "  FAIL") << '\n'
        << "  lambda_min(P)       " << c.measured.h << (c.h_ok() ? "  ok" : "  FAIL") << '\n';
    if (c.bk1_gap) out << "  B_K1 vs printed     max gap " << *c.bk1_gap << '\n';
    if (c.b21_gap) out << "  B_21 vs printed     max gap " << *c.b21_gap << '\n';
    out.flags(flags);
  }
  out << "verify: " << (report.pass() ? "PASS" : "FAIL") << '\n';
  out.precision(precision);
}

RunArtifacts run_and_write(const ExperimentConfig& cfg, std::uint64_t seed, const fs::path& out_dir,
                           const RoundObserver& observer) {
  DEConfig de = cfg.de;
  de.seed = seed;
  const ScenarioSpec spec = make_scenario(cfg.scenario);
  OptimizationResult result = optimize(spec, de, observer);

  fs::create_directories(out_dir);
  RunArtifacts art{std::move(result), {}, out_dir / "result.json", out_dir / "trace.csv"};
  art.result_json = result_to_json(art.result, cfg, seed);
  write_json_file(art.result_path.string(), art.result_json);
  std::ofstream trace(art.trace_path);
  if (!trace) throw std::runtime_error("cannot write " + art.trace_path.string());
  write_trace_csv(trace, art.result.trace.generations);
  if (!trace) throw std::runtime_error("failed writing " + art.trace_path.string());
  return art;
}

ExperimentConfig ablation_config(int row, const std::string& budget, RangeSpace space) {
  nlohmann::json doc{{"scenario", "C"},
                     {"budget", budget},
                     {"ablation_row", row},
                     {"range_space", to_string(space)}};
  return parse_experiment_config(doc);
}

AblationRow run_ablation_row(int row, const std::string& budget, std::uint64_t seed,
                             RangeSpace space, const std::optional<fs::path>& out_dir) {
  const ExperimentConfig cfg = ablation_config(row, budget, space);
  const auto start = std::chrono::steady_clock::now();
  const OptimizationResult result = [&] {
    if (out_dir) return run_and_write(cfg, seed, *out_dir / ("row_" + std::to_string(row))).result;
    DEConfig de = cfg.de;
    de.seed = seed;
    return optimize(make_scenario(cfg.scenario), de);
  }();
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return AblationRow{ablation_variant(row), seed, result.evaluation, elapsed.count(),
                     result.trace.evaluations};
}

void write_ablation_csv(std::ostream& out, const std::vector<AblationRow>& rows) {
  const auto precision = out.precision();
  out << kAblationHeader << '\n' << std::setprecision(17);
  for (const auto& r : rows) {
    out << r.variant.row << ',' << r.variant.label() << ',' << r.seed << ',';
    if (r.best.feasible()) {
      out << r.best.j_inf;
    } else {
      out << "N/A";
    }
    out << ',' << r.best.k << ',' << (r.best.feasible() ? "true" : "false") << ','
        << r.wall_seconds << ',' << r.evaluations << '\n';
  }
  out.precision(precision);
}

nlohmann::json ablation_to_json(const std::vector<AblationRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    out.push_back({{"row", r.variant.row},
                   {"variant", r.variant.label()},
                   {"seed", r.seed},
                   {"performance_index",
                    r.best.feasible() ? nlohmann::json(r.best.j_inf) : nlohmann::json(nullptr)},
                   {"constraint_k", r.best.k},
                   {"evaluation", evaluation_to_json(r.best)},
                   {"wall_seconds", r.wall_seconds},
                   {"evaluations", r.evaluations}});
  }
  return out;
}

}  // namespace qcfb
