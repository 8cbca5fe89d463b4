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

// Tailored differential evolution: bet-and-run initialization followed by
// penalty rounds, each a full DE run with relaxed feasibility rules,
// value scaling, per-generation search-box recentering and early
// termination on stagnation.

#include <functional>
#include <vector>

#include "qcfb/de.hpp"

namespace qcfb {

struct GenerationRecord {
  int round = 0;
  std::int64_t generation = 0;
  double best_fitness = 0.0;
  double best_j = 0.0;
  double best_k = 0.0;
  double best_h = 0.0;
  double best_violation = 0.0;
  std::int64_t evals = 0;  // cumulative over the whole run
};

struct RoundSummary {
  int round = 0;
  double rho = 0.0;
  std::int64_t generations = 0;
  bool stagnated = false;
  EvaluationResult best;
  Vector best_scaled;
};

struct RunTrace {
  std::vector<GenerationRecord> generations;
  std::vector<RoundSummary> rounds;
  Vector bet_and_run_seed;
  Vector best_scaled;
  Vector best_unscaled;
  std::int64_t evaluations = 0;
};

struct RoundOutcome {
  Vector best_scaled;
  EvaluationResult best;
  std::int64_t generations = 0;
  bool stagnated = false;
};

/// State after one generation of a penalty round: the population, its best
/// member and the search box that the next generation will use.
struct GenerationView {
  int round = 0;
  std::int64_t generation = 0;
  const Population& population;
  std::size_t best = 0;
  const Bounds& bounds;
};

using GenerationObserver = std::function<void(const GenerationView&)>;

/// Runs cfg.bet_runs short DE runs of cfg.bet_iters generations inside the
/// fixed box [-b, b] at penalty cfg.round_penalty(0), and returns the final
/// best genome with the smallest fitness. evals, when given, is incremented
/// by the number of evaluations spent.
Vector bet_and_run_init(const ScenarioSpec& scenario, const DEConfig& cfg,
                        std::int64_t* evals = nullptr);

/// One penalty round seeded with seed_genome (scaled space). Generation
/// records are appended to trace when given.
RoundOutcome run_round(const ScenarioSpec& scenario, const DEConfig& cfg, int round, double rho,
                       const Vector& seed_genome, RunTrace* trace = nullptr,
                       const GenerationObserver& on_generation = {});

struct OptimizationResult {
  ControllerRealization controller;
  EvaluationResult evaluation;  // at the final round's penalty
  Vector decision;              // unscaled
  RunTrace trace;
};

using RoundObserver = std::function<void(const RoundSummary&)>;

/// Bet-and-run, then cfg.rounds penalty rounds, each seeded with the
/// previous round's best. Single-threaded and bitwise reproducible per seed.
OptimizationResult optimize(const ScenarioSpec& scenario, const DEConfig& cfg,
                            const RoundObserver& on_round = {},
                            const GenerationObserver& on_generation = {});

}  // namespace qcfb
