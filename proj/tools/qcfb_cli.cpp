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

// qcfb: command-line front end for fixture verification, controller
// synthesis, ablation runs and trace export.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcfb/errors.hpp"
#include "qcfb/harness.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct VerifyArgs {
  std::string fixtures = QCFB_FIXTURE_DIR;
};

struct OptimizeArgs {
  std::string config;
  std::vector<std::uint64_t> seeds;
  std::string out;
  std::string budget;
  bool quiet = false;
};

struct AblateArgs {
  std::vector<int> rows;
  std::uint64_t seed = 1;
  std::string budget = "desk";
  std::string out;
  std::string range_space = "scaled";
  bool quiet = false;
};

struct TraceExportArgs {
  std::string dir;
  std::string output;
};

int cmd_verify(const VerifyArgs& args) {
  const qcfb::VerifyReport report = qcfb::run_verify(args.fixtures);
  qcfb::print_verify_report(std::cout, report);
  return report.pass() ? kExitOk : kExitVerifyFailed;
}

void print_round(const qcfb::RoundSummary& r) {
  std::cerr << "  round " << std::setw(2) << r.round << "  rho " << std::scientific
            << std::setprecision(3) << r.rho << "  gens " << std::defaultfloat << r.generations
            << "  J " << std::setprecision(10) << r.best.j_inf << "  k " << std::setprecision(3)
            << std::scientific << r.best.k << std::defaultfloat << "  "
            << (r.best.feasible() ? "feasible" : "infeasible") << '\n';
}

int cmd_optimize(const OptimizeArgs& args) {
  qcfb::ExperimentConfig cfg = qcfb::load_experiment_config(args.config);
  if (!args.budget.empty()) {
    cfg.budget = args.budget;
    qcfb::apply_budget(qcfb::budget_preset(args.budget), cfg.de);
    cfg.de.validate();
  }
  const std::vector<std::uint64_t> seeds = !args.seeds.empty() ? args.seeds
                                           : !cfg.seeds.empty() ? cfg.seeds
                                                                : std::vector<std::uint64_t>{0};
  const fs::path root = !args.out.empty() ? fs::path(args.out) : fs::path(cfg.output_dir);
  if (root.empty()) throw qcfb::ConfigurationError("no output directory: pass --out or set output_dir");

  for (std::uint64_t seed : seeds) {
    const fs::path dir = seeds.size() == 1 ? root : root / ("seed_" + std::to_string(seed));
    if (!args.quiet) {
      std::cerr << "scenario " << qcfb::to_string(cfg.scenario) << " seed " << seed << '\n';
    }
    const qcfb::RunArtifacts art =
        qcfb::run_and_write(cfg, seed, dir, args.quiet ? qcfb::RoundObserver{} : print_round);
    const qcfb::EvaluationResult& e = art.result.evaluation;
    std::cout << "seed " << seed << ": J_inf " << std::setprecision(10) << e.j_inf << "  k "
              << std::setprecision(3) << std::scientific << e.k << "  lambda_min "
              << e.h << std::defaultfloat << "  " << (e.feasible() ? "feasible" : "infeasible")
              << "  -> " << art.result_path.string() << '\n';
  }
  return kExitOk;
}

int cmd_ablate(const AblateArgs& args) {
  const qcfb::RangeSpace space = args.range_space == "unscaled" ? qcfb::RangeSpace::Unscaled
                                                                 : qcfb::RangeSpace::Scaled;
  qcfb::budget_preset(args.budget);  // reject unknown presets before any work
  std::vector<int> rows = args.rows;
  if (rows.empty()) {
    for (int r = 0; r < qcfb::kAblationRows; ++r) rows.push_back(r);
  }
  for (int r : rows) qcfb::ablation_variant(r);

  const fs::path out(args.out);
  std::vector<qcfb::AblationRow> table;
  for (int r : rows) {
    if (!args.quiet) std::cerr << "row " << r << ": " << qcfb::ablation_variant(r).label() << '\n';
    table.push_back(qcfb::run_ablation_row(r, args.budget, args.seed, space, out));
  }
  fs::create_directories(out);
  {
    std::ofstream csv(out / "ablation.csv");
    if (!csv) throw std::runtime_error("cannot write " + (out / "ablation.csv").string());
    qcfb::write_ablation_csv(csv, table);
  }
  qcfb::write_json_file((out / "ablation.json").string(), qcfb::ablation_to_json(table));
  qcfb::write_ablation_csv(std::cout, table);
  return kExitOk;
}

int cmd_trace_export(const TraceExportArgs& args) {
  const fs::path path = fs::path(args.dir) / "trace.csv";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing trace: " + path.string());
  std::vector<qcfb::GenerationRecord> records = qcfb::read_trace_csv(in);
  std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    return a.round != b.round ? a.round < b.round : a.generation < b.generation;
  });
  if (args.output.empty()) {
    qcfb::write_trace_csv(std::cout, records);
    return kExitOk;
  }
  std::ofstream out(args.output);
  if (!out) throw std::runtime_error("cannot write " + args.output);
  qcfb::write_trace_csv(out, records);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coherent quantum LQG controller synthesis by tailored differential evolution"};
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Evaluate the shipped published controllers");
  verify_cmd->add_option("--fixtures", verify.fixtures, "Fixture directory")
      ->capture_default_str();

  OptimizeArgs optimize;
  auto* optimize_cmd = app.add_subcommand("optimize", "Synthesize a controller from a config");
  optimize_cmd->add_option("--config", optimize.config, "Experiment config (JSON)")->required();
  optimize_cmd->add_option("--seed", optimize.seeds,
                           "Seed(s); several seeds write seed_<n> subdirectories");
  optimize_cmd->add_option("--out", optimize.out, "Output directory (overrides output_dir)");
  optimize_cmd->add_option("--budget", optimize.budget, "Budget preset: full, desk or smoke");
  optimize_cmd->add_flag("--quiet", optimize.quiet, "Suppress per-round progress");

  AblateArgs ablate;
  auto* ablate_cmd = app.add_subcommand("ablate", "Run ablation rows on scenario C");
  ablate_cmd->add_option("--rows", ablate.rows, "Rows 0-10 (default: all)")->delimiter(',');
  ablate_cmd->add_option("--seed", ablate.seed, "Seed")->capture_default_str();
  ablate_cmd->add_option("--budget", ablate.budget, "Budget preset")->capture_default_str();
  ablate_cmd->add_option("--out", ablate.out, "Output directory")->required();
  ablate_cmd->add_option("--range-space", ablate.range_space,
                         "Space of the fixed search ranges")
      ->check(CLI::IsMember({"scaled", "unscaled"}))
      ->capture_default_str();
  ablate_cmd->add_flag("--quiet", ablate.quiet, "Suppress progress");

  TraceExportArgs trace;
  auto* trace_cmd = app.add_subcommand("trace-export", "Print a run's convergence trace as CSV");
  trace_cmd->add_option("dir", trace.dir, "Result directory from optimize")->required();
  trace_cmd->add_option("-o,--output", trace.output, "Write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify_cmd) return cmd_verify(verify);
    if (*optimize_cmd) return cmd_optimize(optimize);
    if (*ablate_cmd) return cmd_ablate(ablate);
    if (*trace_cmd) return cmd_trace_export(trace);
  } catch (const qcfb::ConfigurationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
