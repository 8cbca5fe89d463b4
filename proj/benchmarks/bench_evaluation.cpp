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

#include <random>

#include <benchmark/benchmark.h>

#include "kronecker_lyapunov.hpp"
#include "qcfb/fixtures.hpp"
#include "qcfb/evaluation.hpp"
#include "qcfb/lyapunov.hpp"
#include "qcfb/optimizer.hpp"

namespace {

using namespace qcfb;

void BM_SolveLyapunov(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto m = static_cast<Eigen::Index>(state.range(0));
  const Matrix a = oracle::random_hurwitz(m, rng);
  const Matrix q = oracle::random_psd(m, rng);
  for (auto _ : state) benchmark::DoNotOptimize(solve_lyapunov(a, q));
}
BENCHMARK(BM_SolveLyapunov)->Arg(2)->Arg(4)->Arg(8);

void BM_KroneckerLyapunov(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto m = static_cast<Eigen::Index>(state.range(0));
  const Matrix a = oracle::random_hurwitz(m, rng);
  const Matrix q = oracle::random_psd(m, rng);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::kronecker_lyapunov(a, q));
}
BENCHMARK(BM_KroneckerLyapunov)->Arg(2)->Arg(4)->Arg(8);

void BM_EvaluateFixture(benchmark::State& state) {
  const auto id = static_cast<ScenarioId>(state.range(0));
  const ScenarioSpec spec = make_scenario(id);
  const Vector u = encode(published_fixture(id, QCFB_BENCH_FIXTURE_DIR).controller, spec);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(u, spec, 1e10));
}
BENCHMARK(BM_EvaluateFixture)->Arg(0)->Arg(1)->Arg(2);

void BM_SmokeOptimize(benchmark::State& state) {
  const ScenarioSpec spec = make_scenario(ScenarioId::A);
  DEConfig cfg;
  cfg.rounds = 2;
  cfg.max_gen = 100;
  cfg.stagnation_cap = 100;
  cfg.bet_runs = 2;
  cfg.bet_iters = 5;
  for (auto _ : state) benchmark::DoNotOptimize(optimize(spec, cfg).evaluation.j_inf);
}
BENCHMARK(BM_SmokeOptimize)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
