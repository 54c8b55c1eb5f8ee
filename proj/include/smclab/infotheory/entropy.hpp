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

#include <span>
#include <string>
#include <vector>

#include "smclab/infotheory/joint_distribution.hpp"

namespace smclab::infotheory {

// Outcome of the additive-correlation test for a pair of binary variables:
// gap = H(A,B) - 2*H(A xor B), additively correlated iff the gap is positive.
struct CorrelationCertificate {
  std::string label_a;
  std::string label_b;
  double gap_bits = 0.0;
  bool is_additively_correlated = false;
};

// Shannon entropy, in bits, of the marginal on `subset`. Subset must be
// non-empty; labels must exist.
double entropy(const JointDistribution& dist, std::span<const std::string> subset);

// H(targets | given) = H(targets u given) - H(given). `given` may be empty;
// the label sets must be disjoint.
double conditional_entropy(const JointDistribution& dist,
                           std::span<const std::string> targets,
                           std::span<const std::string> given);

// Distribution of a xor b for two binary variables.
JointDistribution xor_marginal(const JointDistribution& dist,
                               const std::string& a, const std::string& b);

CorrelationCertificate additive_correlation(const JointDistribution& dist,
                                            const std::string& a,
                                            const std::string& b);

// Convenience overloads for brace-initialized label lists.
inline double entropy(const JointDistribution& dist, std::initializer_list<std::string> subset) {
  std::vector<std::string> v(subset);
  return entropy(dist, std::span<const std::string>(v));
}
inline double conditional_entropy(const JointDistribution& dist,
                                  std::initializer_list<std::string> targets,
                                  std::initializer_list<std::string> given) {
  std::vector<std::string> t(targets), g(given);
  return conditional_entropy(dist, std::span<const std::string>(t),
                             std::span<const std::string>(g));
}

}  // namespace smclab::infotheory
