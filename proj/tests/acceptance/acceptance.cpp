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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kronecker_lyapunov.hpp"
#include "qcfb/harness.hpp"
#include "qcfb/lyapunov.hpp"

namespace fs = std::filesystem;
using namespace qcfb;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

fs::path work_dir() {
  const fs::path p = fs::temp_directory_path() / "qcfb_acceptance";
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

// Criterion 1
Outcome fixture_verification() {
  const auto start = std::chrono::steady_clock::now();
  const VerifyReport report = run_verify(QCFB_TEST_FIXTURE_DIR);
  const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  std::ostringstream d;
  for (const auto& c : report.checks) {
    d << to_string(c.id) << ": J=" << fmt("%.10f", c.measured.j_inf)
      << " k=" << fmt("%.2e", c.measured.k) << "; ";
  }
  d << fmt("%.3f s", took.count());
  bool pass = report.checks.size() == 3 && took.count() < 1.0;
  for (const auto& c : report.checks) pass = pass && c.j_ok() && c.k_ok();
  return {pass, d.str()};
}

// Criterion 2
Outcome coupled_identities() {
  const PublishedFixture a = published_fixture(ScenarioId::A, QCFB_TEST_FIXTURE_DIR);
  const PublishedFixture c = published_fixture(ScenarioId::C, QCFB_TEST_FIXTURE_DIR);
  const auto theta = make_canonical_theta(2);
  const Matrix bk1_a = derive_bk1(a.controller.c_k(), theta);
  const Matrix bk1_c = derive_bk1(c.controller.c_k(), theta);
  const Matrix b21_c = derive_b21(*c.controller.b_12(), theta);
  // Printed entries carry eight mantissa decimals, so agreement to every
  // printed digit means a gap below half a unit in that last place.
  const auto digits_ok = [](const Matrix& derived, const Matrix& printed) {
    for (Eigen::Index i = 0; i < printed.size(); ++i) {
      const double p = printed.data()[i];
      const double ulp = p == 0.0 ? 5e-9 : 0.5e-8 * std::pow(10.0, std::floor(std::log10(std::abs(p))));
      if (std::abs(derived.data()[i] - p) > ulp) return false;
    }
    return true;
  };
  const bool pass = a.printed_bk1 && c.printed_bk1 && c.printed_b21 &&
                    digits_ok(bk1_a, *a.printed_bk1) && digits_ok(bk1_c, *c.printed_bk1) &&
                    digits_ok(b21_c, *c.printed_b21);
  std::ostringstream d;
  d << "max gaps A B_K1 " << fmt("%.1e", (bk1_a - *a.printed_bk1).cwiseAbs().maxCoeff())
    << ", C B_K1 " << fmt("%.1e", (bk1_c - *c.printed_bk1).cwiseAbs().maxCoeff()) << ", C B_21 "
    << fmt("%.1e", (b21_c - *c.printed_b21).cwiseAbs().maxCoeff());
  return {pass, d.str()};
}

// Criterion 3
Outcome lyapunov_oracle() {
  std::mt19937_64 rng(20240601);
  const Eigen::Index sizes[] = {2, 4, 8};
  int systems = 0;
  int failures = 0;
  double worst_rel = 0.0;
  double worst_eig = 0.0;
  for (int t = 0; t < 1002; ++t) {
    const Eigen::Index m = sizes[t % 3];
    const Matrix a = oracle::random_hurwitz(m, rng);
    const Matrix q = oracle::random_psd(m, rng);
    const Matrix p = solve_lyapunov(a, q);
    const Matrix ref = oracle::kronecker_lyapunov(a, q);
    const double rel = (p - ref).cwiseAbs().maxCoeff() / ref.cwiseAbs().maxCoeff();
    const double lmin = Eigen::SelfAdjointEigenSolver<Matrix>(p).eigenvalues().minCoeff();
    worst_rel = std::max(worst_rel, rel);
    worst_eig = std::min(worst_eig, lmin);
    if (!(rel <= 1e-9) || !(lmin >= -1e-9)) ++failures;
    ++systems;
  }
  std::ostringstream d;
  d << systems << " systems, worst relative gap " << fmt("%.2e", worst_rel)
    << ", most negative lambda_min " << fmt("%.2e", worst_eig) << ", failures " << failures;
  return {failures == 0 && systems >= 1000, d.str()};
}

// Criterion 4
Outcome optimizer_properties() {
  std::vector<std::string> failed;
  const auto check = [&](bool ok, const char* what) {
    if (!ok) failed.emplace_back(what);
  };

  bool loglinear = true;
  for (int rounds : {2, 10, 20, 30}) {
    for (int p = 0; p < rounds; ++p) {
      const double expected = static_cast<double>(p) / (rounds - 1) * std::log(1e10);
      const double got = std::log(penalty_schedule(p, rounds, 1e10));
      if (std::abs(got - expected) > 1e-12 * std::max(1.0, expected)) loglinear = false;
    }
  }
  check(loglinear, "penalty log-linearity");

  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  bool lex = true;
  for (int t = 0; t < 100000; ++t) {
    EvaluationResult x, y;
    x.violation = u(rng) < 0.5 ? 0.0 : std::floor(u(rng) * 3.0) * 0.5;
    y.violation = u(rng) < 0.5 ? 0.0 : std::floor(u(rng) * 3.0) * 0.5;
    x.fitness = std::floor(u(rng) * 5.0);
    y.fitness = std::floor(u(rng) * 5.0);
    const auto key = [](const EvaluationResult& e) {
      return e.violation == 0.0 ? std::pair{0.0, e.fitness} : std::pair{1.0, e.violation};
    };
    const bool target_wins = feasibility_select(x, y) == Winner::Target;
    if (target_wins != (key(x) < key(y))) lex = false;
  }
  check(lex, "selection order");

  bool crossover = true;
  SplitMix64 cx(8);
  for (int t = 0; t < 1000; ++t) {
    const Vector target = Vector::Constant(16, static_cast<double>(t));
    const Vector donor = target.array() + 1.0;
    if (binomial_crossover(target, donor, 1.0, cx) != donor) crossover = false;
    if ((binomial_crossover(target, donor, 0.0, cx).array() != target.array()).count() != 1) {
      crossover = false;
    }
  }
  check(crossover, "crossover edges");

  const ScenarioSpec spec = make_scenario(ScenarioId::A);
  DEConfig cfg;
  cfg.rounds = 4;
  cfg.max_gen = 600;
  cfg.stagnation_cap = 200;
  cfg.seed = 2718;
  bool recenter = true;
  const GenerationObserver watch = [&](const GenerationView& v) {
    const Vector& center = v.population.members[v.generation == 0 ? 0 : v.best];
    if (v.bounds.lower != (center.array() - cfg.zeta).matrix() ||
        v.bounds.upper != (center.array() + cfg.zeta).matrix()) {
      recenter = false;
    }
  };
  const OptimizationResult first = optimize(spec, cfg, {}, watch);
  check(recenter, "bounds recentering");

  bool monotone = true;
  const auto& g = first.trace.generations;
  for (std::size_t i = 1; i < g.size(); ++i) {
    if (g[i].round != g[i - 1].round) continue;
    const bool was_feasible = g[i - 1].best_violation == 0.0;
    const bool is_feasible = g[i].best_violation == 0.0;
    if (was_feasible && (!is_feasible || g[i].best_fitness > g[i - 1].best_fitness)) monotone = false;
    if (!was_feasible && !is_feasible && g[i].best_violation > g[i - 1].best_violation) monotone = false;
  }
  check(monotone, "within-round monotonicity");

  const OptimizationResult second = optimize(spec, cfg);
  bool same = first.trace.generations.size() == second.trace.generations.size() &&
              first.decision == second.decision;
  for (std::size_t i = 0; same && i < g.size(); ++i) {
    const auto& a = g[i];
    const auto& b = second.trace.generations[i];
    same = a.best_fitness == b.best_fitness && a.best_j == b.best_j && a.best_k == b.best_k &&
           a.best_h == b.best_h && a.best_violation == b.best_violation && a.evals == b.evals;
  }
  check(same, "bitwise reproducibility");

  std::ostringstream d;
  d << "6 properties, " << g.size() << " trace records";
  for (const auto& f : failed) d << "; failed: " << f;
  return {failed.empty(), d.str()};
}

struct RunRecord {
  fs::path result;
  EvaluationResult eval;
};

std::vector<RunRecord> g_emitted;

// Criterion 5
Outcome desk_synthesis(const fs::path& root) {
  const ExperimentConfig cfg = load_experiment_config(QCFB_TEST_CONFIG_DIR "/scenario_a_desk.json");
  bool pass = false;
  double best_j = std::numeric_limits<double>::infinity();
  std::ostringstream d;
  d << "P=" << cfg.de.rounds << " max_gen=" << cfg.de.max_gen
    << " cap=" << cfg.de.stagnation_cap << ";";
  for (std::uint64_t seed : cfg.seeds) {
    const RunArtifacts art = run_and_write(cfg, seed, root / ("a_seed_" + std::to_string(seed)));
    const EvaluationResult& e = art.result.evaluation;
    g_emitted.push_back({art.result_path, e});
    d << " seed " << seed << ": J=" << fmt("%.6f", e.j_inf) << " k=" << fmt("%.1e", e.k)
      << (e.feasible() ? "" : " infeasible");
    const bool ok = e.feasible() && e.k <= 1e-8 && e.h > 0.0 && e.j_inf <= 4.18;
    if (e.feasible() && e.k <= 1e-8 && e.h > 0.0) best_j = std::min(best_j, e.j_inf);
    pass = pass || ok;
  }
  d << "; best feasible J=" << fmt("%.6f", best_j) << " (gate 4.18)";
  return {pass, d.str()};
}

// Criterion 6
Outcome ablation_sanity(const fs::path& root) {
  const std::uint64_t seed = 1;
  const AblationRow full = run_ablation_row(0, "desk", seed, RangeSpace::Scaled, root / "ablation");
  const AblationRow fp0 = run_ablation_row(2, "desk", seed, RangeSpace::Scaled, root / "ablation");
  for (int row : {0, 2}) {
    const fs::path p = root / "ablation" / ("row_" + std::to_string(row)) / "result.json";
    g_emitted.push_back({p, row == 0 ? full.best : fp0.best});
  }
  const bool range_ok = fp0.best.k >= 1e-4 && fp0.best.k <= 2e-2;
  const bool ratio_ok = full.best.k <= 1e-4 * fp0.best.k;
  std::ostringstream d;
  d << "seed " << seed << "; row 2 k=" << fmt("%.3e", fp0.best.k) << " J=" << fmt("%.6g", fp0.best.j_inf)
    << (range_ok ? " (in [1e-4, 2e-2])" : " (outside [1e-4, 2e-2])") << "; row 0 k="
    << fmt("%.3e", full.best.k) << " J=" << fmt("%.6g", full.best.j_inf)
    << (ratio_ok ? " (>= 1e4 smaller)" : " (not 1e4 smaller)");
  return {range_ok && ratio_ok, d.str()};
}

// Criterion 7
Outcome realizability_regression() {
  int feasible = 0;
  double worst = 0.0;
  for (const auto& run : g_emitted) {
    const nlohmann::json doc = read_json_file(run.result.string());
    if (!doc.at("evaluation").at("feasible").get<bool>()) continue;
    ++feasible;
    const StoredController s = stored_controller_from_json(doc);
    const auto theta = make_canonical_theta(s.theta_k.rows());
    if (s.theta_k != theta.matrix()) worst = std::numeric_limits<double>::infinity();
    const Matrix bk1 = derive_bk1(s.c_k, theta);
    worst = std::max(worst, (bk1 - s.b_k1).cwiseAbs().maxCoeff() /
                                std::max(1.0, s.b_k1.cwiseAbs().maxCoeff()));
    if (s.b_12) {
      const Matrix b21 = derive_b21(*s.b_12, theta);
      worst = std::max(worst, (b21 - *s.b_21).cwiseAbs().maxCoeff() /
                                  std::max(1.0, s.b_21->cwiseAbs().maxCoeff()));
    }
  }
  std::ostringstream d;
  d << feasible << " feasible emitted controllers, worst re-derivation gap " << fmt("%.1e", worst);
  return {feasible > 0 && worst <= 1e-12, d.str()};
}

}  // namespace

int main() {
  const fs::path root = work_dir();
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "fixture verification", fixture_verification},
      {2, "coupled-matrix identities", coupled_identities},
      {3, "Lyapunov oracle equivalence", lyapunov_oracle},
      {4, "optimizer property suite", optimizer_properties},
      {5, "desk-scale synthesis, scenario A", [&] { return desk_synthesis(root); }},
      {6, "ablation sanity, scenario C", [&] { return ablation_sanity(root); }},
      {7, "physical-realizability regression", realizability_regression},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("[%s] criterion %d: %s -- %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
