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

#include <cmath>
#include <cstddef>

namespace smclab {

// All entropies in this project are in bits (log base 2).

// Absolute tolerance for entropy equality checks. Tables are exact rationals
// rendered in floating point, so this is far above accumulated rounding.
inline constexpr double kEntropyTol = 1e-9;

// -p*log2(p), with the 0*log(0) = 0 convention.
inline double entropy_term(double p) {
  return p > 0.0 ? -p * std::log2(p) : 0.0;
}

// Entropy of a Bernoulli(p) variable.
inline double binary_entropy(double p) {
  return entropy_term(p) + entropy_term(1.0 - p);
}

// P(A xor B = 1) for independent bits with P(A=1)=pa, P(B=1)=pb.
inline double xor_convolve(double pa, double pb) {
  return pa + pb - 2.0 * pa * pb;
}

inline bool is_power_of_two(std::size_t n) {
  return n != 0 && (n & (n - 1)) == 0;
}

inline std::size_t log2_exact(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

}  // namespace smclab
