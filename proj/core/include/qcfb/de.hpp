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

// Differential-evolution building blocks: configuration, penalty schedule,
// DE/rand/1 mutation, binomial crossover, feasibility-rule selection and
// search-box handling. The loop that combines them lives in optimizer.hpp.

#include <cstdint>
#include <span>
#include <vector>

#include "qcfb/evaluation.hpp"
#include "qcfb/rng.hpp"

namespace qcfb {

enum class PenaltyMode { Scheduled, Fixed };
enum class RangeMode { Adaptive, Fixed };

const char* to_string(PenaltyMode mode);
const char* to_string(RangeMode mode);

struct DEConfig {
  int n_pop = 20;
  double f_scale = 0.85;
  double cr = 0.95;
  double delta = kDefaultDelta;
  double phi = kDefaultPhi;
  int rounds = 20;
  double rho_max = 1e10;
  double alpha = 10.0;
  double zeta = 1.0;
  int bet_runs = 10;
  int bet_iters = 10;
  double init_bound = 1.0;
  std::int64_t max_gen = 300000;
  std::int64_t stagnation_cap = 60000;
  double conv_threshold = 1e-10;
  std::uint64_t seed = 0;

  PenaltyMode penalty_mode = PenaltyMode::Scheduled;
  double fixed_rho = 0.0;  // used when penalty_mode == Fixed
  RangeMode range_mode = RangeMode::Adaptive;
  double fixed_half_width = 10.0;  // scaled space; used when range_mode == Fixed
  /// Keep every n-th generation record (the last generation of a round is
  /// always kept).
  std::int64_t trace_stride = 1;

  /// Throws ConfigurationError describing the first violated constraint.
  void validate() const;
  /// Penalty factor of round p under the configured penalty mode.
  double round_penalty(int p) const;

  bool operator==(const DEConfig&) const = default;
};

/// rho_max^(p / (rounds - 1)).
double penalty_schedule(int p, int rounds, double rho_max);

struct Bounds {
  Vector lower;
  Vector upper;
};

/// best -/+ zeta componentwise.
Bounds adaptive_bounds(const Vector& best, double zeta);
Bounds fixed_bounds(Eigen::Index dim, double half_width);
/// Components outside the box are moved onto the violated bound.
void clamp_to(Vector& v, const Bounds& bounds);

/// alpha * scaled.
Vector scale_decision(const Vector& scaled, double alpha);

struct Population {
  std::vector<Vector> members;
  std::vector<EvaluationResult> evals;

  std::size_t size() const { return members.size(); }
  /// First member that no other member precedes.
  std::size_t best_index() const;
};

/// Strict feasibility order: feasible before infeasible, then smaller
/// violation among infeasible, then smaller fitness among feasible.
bool precedes(const EvaluationResult& a, const EvaluationResult& b);

enum class Winner { Target, Trial };

/// Pairwise survivor choice. Exact ties go to the trial.
Winner feasibility_select(const EvaluationResult& target, const EvaluationResult& trial);

struct MutationPick {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
};

/// Three indices distinct from each other and from target.
MutationPick pick_distinct(std::size_t n_pop, std::size_t target, SplitMix64& rng);

/// u_a + f (u_b - u_c). No clamping.
Vector mutate_rand1(std::span<const Vector> members, const MutationPick& pick, double f);
Vector mutate_rand1(std::span<const Vector> members, std::size_t target, double f,
                    SplitMix64& rng);

/// Component j comes from the donor when r[j] <= cr or j == j_rand.
Vector binomial_crossover(const Vector& target, const Vector& donor, double cr,
                          std::span<const double> r, std::size_t j_rand);
/// Draws j_rand and r_j in (0, 1] from rng, so cr = 0 and cr = 1 are exact.
Vector binomial_crossover(const Vector& target, const Vector& donor, double cr, SplitMix64& rng);

}  // namespace qcfb
