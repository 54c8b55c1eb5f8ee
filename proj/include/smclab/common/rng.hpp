// Copyright 2026 The smclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace smclab {

// SplitMix64 finalizer. Used for counter-based seed splitting: trial k of a
// run with master seed s gets derive_seed(s, k), so any trial can be replayed
// in isolation.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter) {
  return splitmix64(master ^ splitmix64(counter + 0x51ed2701a0b8dd01ULL));
}

// Deterministic uniform draws. std::mt19937_64 output is pinned by the
// standard; the std distributions are not, so every mapping from raw words to
// values lives here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Unbiased integer in [0, k) via rejection sampling.
  std::uint64_t uniform_below(std::uint64_t k) {
    if (k <= 1) return 0;
    const std::uint64_t threshold = (0 - k) % k;  // 2^64 mod k
    std::uint64_t r = next_u64();
    while (r < threshold) r = next_u64();
    return r % k;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace smclab
