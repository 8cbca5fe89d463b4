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

#include "qcfb/optimizer.hpp"

#include <optional>

namespace qcfb {

namespace {

struct PhaseSettings {
  StreamTag init_tag;
  StreamTag step_tag;
  std::uint64_t label;  // round index or bet-and-run run index
  double rho;
  bool adaptive;
  Bounds bounds;
  std::int64_t max_gen;
  std::int64_t stagnation_cap;
  int record_round;  // -1: do not record
};

struct PhaseResult {
  Population population;
  std::size_t best = 0;
  std::int64_t generations = 0;
  bool stagnated = false;
};

class Evolution {
 public:
  Evolution(const ScenarioSpec& scenario, const DEConfig& cfg)
      : scenario_(scenario), cfg_(cfg), dim_(scenario.layout.size()) {}

  std::int64_t evaluations() const { return evals_; }

  PhaseResult run(const PhaseSettings& s, const std::optional<Vector>& seed, RunTrace* trace,
                  const GenerationObserver& observer = {}) {
    PhaseResult out;
    Population& pop = out.population;
    Bounds bounds = s.bounds;
    const auto n = static_cast<std::size_t>(cfg_.n_pop);

    pop.members.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == 0 && seed) {
        pop.members.push_back(*seed);
        continue;
      }
      SplitMix64 rng = substream(cfg_.seed, s.init_tag, s.label, 0, i);
      Vector m(dim_);
      for (Eigen::Index j = 0; j < dim_; ++j) {
        m(j) = bounds.lower(j) + rng.uniform() * (bounds.upper(j) - bounds.lower(j));
      }
      pop.members.push_back(std::move(m));
    }
    pop.evals.reserve(n);
    for (const auto& m : pop.members) pop.evals.push_back(evaluate_scaled(m, s.rho));

    out.best = pop.best_index();
    record(trace, s, 0, pop.evals[out.best]);
    if (observer) observer(GenerationView{s.record_round, 0, pop, out.best, bounds});

    std::vector<Vector> trials(n);
    std::vector<EvaluationResult> trial_evals(n);
    std::int64_t stagnant = 0;
    for (std::int64_t g = 1; g <= s.max_gen; ++g) {
      for (std::size_t i = 0; i < n; ++i) {
        SplitMix64 rng = substream(cfg_.seed, s.step_tag, s.label, static_cast<std::uint64_t>(g), i);
        const Vector donor = mutate_rand1(pop.members, i, cfg_.f_scale, rng);
        trials[i] = binomial_crossover(pop.members[i], donor, cfg_.cr, rng);
        clamp_to(trials[i], bounds);
      }
      for (std::size_t i = 0; i < n; ++i) trial_evals[i] = evaluate_scaled(trials[i], s.rho);
      for (std::size_t i = 0; i < n; ++i) {
        if (feasibility_select(pop.evals[i], trial_evals[i]) == Winner::Trial) {
          pop.members[i].swap(trials[i]);
          pop.evals[i] = trial_evals[i];
        }
      }

      const EvaluationResult previous = pop.evals[out.best];
      out.best = pop.best_index();
      const EvaluationResult& current = pop.evals[out.best];
      stagnant = improved(previous, current) ? 0 : stagnant + 1;
      out.generations = g;
      if (s.adaptive) bounds = adaptive_bounds(pop.members[out.best], cfg_.zeta);
      if (observer) observer(GenerationView{s.record_round, g, pop, out.best, bounds});

      const bool stop = stagnant >= s.stagnation_cap || g == s.max_gen;
      if (stop || g % cfg_.trace_stride == 0) record(trace, s, g, current);
      if (stagnant >= s.stagnation_cap) {
        out.stagnated = true;
        break;
      }
    }
    return out;
  }

 private:
  EvaluationResult evaluate_scaled(const Vector& scaled, double rho) {
    ++evals_;
    return evaluate(scale_decision(scaled, cfg_.alpha), scenario_, rho, cfg_.phi, cfg_.delta);
  }

  // Progress in the feasibility order by at least the convergence threshold.
  bool improved(const EvaluationResult& before, const EvaluationResult& after) const {
    if (after.feasible() != before.feasible()) return after.feasible();
    const double gain = after.feasible() ? before.fitness - after.fitness
                                         : before.violation - after.violation;
    return gain > 0.0 && gain >= cfg_.conv_threshold;
  }

  void record(RunTrace* trace, const PhaseSettings& s, std::int64_t g,
              const EvaluationResult& best) const {
    if (!trace || s.record_round < 0) return;
    trace->generations.push_back(GenerationRecord{s.record_round, g, best.fitness, best.j_inf,
                                                  best.k, best.h, best.violation, evals_});
  }

  const ScenarioSpec& scenario_;
  const DEConfig& cfg_;
  Eigen::Index dim_;
  std::int64_t evals_ = 0;
};

Bounds round_bounds(const DEConfig& cfg, const Vector& seed) {
  return cfg.range_mode == RangeMode::Adaptive ? adaptive_bounds(seed, cfg.zeta)
                                               : fixed_bounds(seed.size(), cfg.fixed_half_width);
}

}  // namespace

Vector bet_and_run_init(const ScenarioSpec& scenario, const DEConfig& cfg, std::int64_t* evals) {
  cfg.validate();
  Evolution evo(scenario, cfg);
  const double rho = cfg.round_penalty(0);
  std::optional<Vector> chosen;
  double chosen_fitness = 0.0;
  for (int run = 0; run < cfg.bet_runs; ++run) {
    const PhaseSettings s{StreamTag::BetAndRun,
                          StreamTag::BetAndRun,
                          static_cast<std::uint64_t>(run),
                          rho,
                          /*adaptive=*/false,
                          fixed_bounds(scenario.layout.size(), cfg.init_bound),
                          cfg.bet_iters,
                          /*stagnation_cap=*/cfg.bet_iters + 1,
                          /*record_round=*/-1};
    PhaseResult r = evo.run(s, std::nullopt, nullptr);
    const EvaluationResult& e = r.population.evals[r.best];
    if (!chosen || e.fitness < chosen_fitness) {
      chosen = r.population.members[r.best];
      chosen_fitness = e.fitness;
    }
  }
  if (evals) *evals += evo.evaluations();
  return *chosen;
}

RoundOutcome run_round(const ScenarioSpec& scenario, const DEConfig& cfg, int round, double rho,
                       const Vector& seed_genome, RunTrace* trace,
                       const GenerationObserver& on_generation) {
  cfg.validate();
  if (seed_genome.size() != scenario.layout.size()) {
    throw ConfigurationError("seed genome length does not match the scenario layout");
  }
  Evolution evo(scenario, cfg);
  const std::int64_t evals_before = trace ? trace->evaluations : 0;
  const PhaseSettings s{StreamTag::RoundInit,
                        StreamTag::Generation,
                        static_cast<std::uint64_t>(round),
                        rho,
                        cfg.range_mode == RangeMode::Adaptive,
                        round_bounds(cfg, seed_genome),
                        cfg.max_gen,
                        cfg.stagnation_cap,
                        round};
  const std::size_t first_record = trace ? trace->generations.size() : 0;
  PhaseResult r = evo.run(s, seed_genome, trace, on_generation);
  if (trace) {
    for (std::size_t i = first_record; i < trace->generations.size(); ++i) {
      trace->generations[i].evals += evals_before;
    }
    trace->evaluations += evo.evaluations();
  }
  return RoundOutcome{r.population.members[r.best], r.population.evals[r.best], r.generations,
                      r.stagnated};
}

OptimizationResult optimize(const ScenarioSpec& scenario, const DEConfig& cfg,
                            const RoundObserver& on_round,
                            const GenerationObserver& on_generation) {
  cfg.validate();
  RunTrace trace;
  Vector seed = bet_and_run_init(scenario, cfg, &trace.evaluations);
  trace.bet_and_run_seed = seed;

  RoundOutcome last;
  for (int p = 0; p < cfg.rounds; ++p) {
    const double rho = cfg.round_penalty(p);
    last = run_round(scenario, cfg, p, rho, seed, &trace, on_generation);
    RoundSummary summary{p, rho, last.generations, last.stagnated, last.best, last.best_scaled};
    if (on_round) on_round(summary);
    trace.rounds.push_back(std::move(summary));
    seed = last.best_scaled;
  }

  trace.best_scaled = last.best_scaled;
  trace.best_unscaled = scale_decision(last.best_scaled, cfg.alpha);
  return OptimizationResult{decode(trace.best_unscaled, scenario), last.best, trace.best_unscaled,
                            std::move(trace)};
}

}  // namespace qcfb
