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

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace qcfb {

/// SplitMix64. Small state, so a fresh substream per (round, generation,
/// member) is cheap and draws never depend on evaluation order.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform on [0, n) for n > 0, by rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = max() - max() % n;
    std::uint64_t x = (*this)();
    while (x >= limit) x = (*this)();
    return x % n;
  }

 private:
  std::uint64_t state_;
};

/// Derives an independent substream seed from a root seed and a path of
/// integer labels.
inline std::uint64_t derive_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = SplitMix64(seed)();
  for (std::uint64_t label : path) h = SplitMix64(h ^ SplitMix64(label + 0x632be59bd9b4e019ULL)())();
  return h;
}

/// Stream labels separating the phases of one optimization run.
enum class StreamTag : std::uint64_t { BetAndRun = 1, RoundInit = 2, Generation = 3 };

inline SplitMix64 substream(std::uint64_t seed, StreamTag tag, std::uint64_t a, std::uint64_t b,
                            std::uint64_t c) {
  return SplitMix64(derive_stream(seed, {static_cast<std::uint64_t>(tag), a, b, c}));
}

}  // namespace qcfb
