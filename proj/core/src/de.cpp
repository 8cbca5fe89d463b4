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

#include "qcfb/de.hpp"

#include <cmath>
#include <string>

namespace qcfb {

const char* to_string(PenaltyMode mode) {
  return mode == PenaltyMode::Scheduled ? "scheduled" : "fixed";
}

const char* to_string(RangeMode mode) { return mode == RangeMode::Adaptive ? "adaptive" : "fixed"; }

void DEConfig::validate() const {
  auto fail = [](const std::string& what) { throw ConfigurationError("invalid DE config: " + what); };
  if (n_pop < 4) fail("n_pop must be >= 4");
  if (!(f_scale >= 0.0) || !std::isfinite(f_scale)) fail("f_scale must be finite and >= 0");
  if (!(cr >= 0.0 && cr <= 1.0)) fail("cr must lie in [0, 1]");
  if (!(delta > 0.0)) fail("delta must be > 0");
  if (!(phi > 0.0)) fail("phi must be > 0");
  if (rounds < 2) fail("rounds must be >= 2");
  if (!(rho_max >= 1.0) || !std::isfinite(rho_max)) fail("rho_max must be finite and >= 1");
  if (!(alpha >= 1.0) || !std::isfinite(alpha)) fail("alpha must be finite and >= 1");
  if (!(zeta > 0.0)) fail("zeta must be > 0");
  if (bet_runs < 1) fail("bet_runs must be >= 1");
  if (bet_iters < 0) fail("bet_iters must be >= 0");
  if (!(init_bound > 0.0)) fail("init_bound must be > 0");
  if (max_gen < 1) fail("max_gen must be >= 1");
  if (stagnation_cap < 1) fail("stagnation_cap must be >= 1");
  if (!(conv_threshold >= 0.0)) fail("conv_threshold must be >= 0");
  if (!(fixed_rho >= 0.0) || !std::isfinite(fixed_rho)) fail("fixed_rho must be finite and >= 0");
  if (!(fixed_half_width > 0.0)) fail("fixed_half_width must be > 0");
  if (trace_stride < 1) fail("trace_stride must be >= 1");
}

double DEConfig::round_penalty(int p) const {
  return penalty_mode == PenaltyMode::Fixed ? fixed_rho : penalty_schedule(p, rounds, rho_max);
}

double penalty_schedule(int p, int rounds, double rho_max) {
  if (rounds < 2) throw ConfigurationError("penalty schedule needs at least two rounds");
  if (p < 0 || p > rounds - 1) {
    throw std::out_of_range("penalty round " + std::to_string(p) + " outside [0, " +
                            std::to_string(rounds - 1) + "]");
  }
  if (p == 0) return 1.0;
  if (p == rounds - 1) return rho_max;
  return std::pow(rho_max, static_cast<double>(p) / static_cast<double>(rounds - 1));
}

Bounds adaptive_bounds(const Vector& best, double zeta) {
  return Bounds{best.array() - zeta, best.array() + zeta};
}

Bounds fixed_bounds(Eigen::Index dim, double half_width) {
  return Bounds{Vector::Constant(dim, -half_width), Vector::Constant(dim, half_width)};
}

void clamp_to(Vector& v, const Bounds& bounds) {
  v = v.cwiseMax(bounds.lower).cwiseMin(bounds.upper);
}

Vector scale_decision(const Vector& scaled, double alpha) { return alpha * scaled; }

bool precedes(const EvaluationResult& a, const EvaluationResult& b) {
  const bool fa = a.feasible();
  const bool fb = b.feasible();
  if (fa != fb) return fa;
  if (!fa) return a.violation < b.violation;
  return a.fitness < b.fitness;
}

std::size_t Population::best_index() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < evals.size(); ++i) {
    if (precedes(evals[i], evals[best])) best = i;
  }
  return best;
}

Winner feasibility_select(const EvaluationResult& target, const EvaluationResult& trial) {
  return precedes(target, trial) ? Winner::Target : Winner::Trial;
}

MutationPick pick_distinct(std::size_t n_pop, std::size_t target, SplitMix64& rng) {
  if (n_pop < 4) throw ConfigurationError("DE/rand/1 needs a population of at least 4");
  MutationPick p;
  do {
    p.a = rng.below(n_pop);
  } while (p.a == target);
  do {
    p.b = rng.below(n_pop);
  } while (p.b == target || p.b == p.a);
  do {
    p.c = rng.below(n_pop);
  } while (p.c == target || p.c == p.a || p.c == p.b);
  return p;
}

Vector mutate_rand1(std::span<const Vector> members, const MutationPick& pick, double f) {
  return members[pick.a] + f * (members[pick.b] - members[pick.c]);
}

Vector mutate_rand1(std::span<const Vector> members, std::size_t target, double f,
                    SplitMix64& rng) {
  return mutate_rand1(members, pick_distinct(members.size(), target, rng), f);
}

Vector binomial_crossover(const Vector& target, const Vector& donor, double cr,
                          std::span<const double> r, std::size_t j_rand) {
  if (target.size() != donor.size() || r.size() != static_cast<std::size_t>(target.size())) {
    throw DimensionError("crossover operands differ in length");
  }
  Vector trial = target;
  for (Eigen::Index j = 0; j < target.size(); ++j) {
    if (r[static_cast<std::size_t>(j)] <= cr || static_cast<std::size_t>(j) == j_rand) {
      trial(j) = donor(j);
    }
  }
  return trial;
}

Vector binomial_crossover(const Vector& target, const Vector& donor, double cr, SplitMix64& rng) {
  const auto dim = static_cast<std::size_t>(target.size());
  const std::size_t j_rand = rng.below(dim);
  std::vector<double> r(dim);
  for (auto& x : r) x = 1.0 - rng.uniform();
  return binomial_crossover(target, donor, cr, r, j_rand);
}

}  // namespace qcfb
