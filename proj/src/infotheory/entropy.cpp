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

#include "smclab/infotheory/entropy.hpp"

#include <stdexcept>
#include <unordered_set>

#include "smclab/common/math.hpp"

namespace smclab::infotheory {

double entropy(const JointDistribution& dist, std::span<const std::string> subset) {
  if (subset.empty()) throw std::invalid_argument("entropy requires a non-empty subset");
  const JointDistribution m = dist.marginal(subset);
  double h = 0.0;
  for (double p : m.probabilities()) h += entropy_term(p);
  return h;
}

double conditional_entropy(const JointDistribution& dist,
                           std::span<const std::string> targets,
                           std::span<const std::string> given) {
  if (targets.empty()) throw std::invalid_argument("conditional_entropy requires targets");
  std::unordered_set<std::string> g(given.begin(), given.end());
  for (const auto& t : targets) {
    if (g.count(t) != 0) {
      throw std::invalid_argument("targets and given must be disjoint: " + t);
    }
  }
  std::vector<std::string> joint(targets.begin(), targets.end());
  joint.insert(joint.end(), given.begin(), given.end());
  const double h_joint = entropy(dist, joint);
  if (given.empty()) return h_joint;
  return h_joint - entropy(dist, given);
}

JointDistribution xor_marginal(const JointDistribution& dist,
                               const std::string& a, const std::string& b) {
  if (dist.alphabet_size(a) != 2 || dist.alphabet_size(b) != 2) {
    throw std::invalid_argument("xor_marginal requires binary variables");
  }
  const std::vector<std::string> pair{a, b};
  const JointDistribution m = dist.marginal(pair);
  const auto& t = m.probabilities();  // row-major over (a, b)
  const double p1 = t[1] + t[2];      // (0,1) and (1,0)
  return JointDistribution({a + "_xor_" + b}, {2}, {1.0 - p1, p1});
}

CorrelationCertificate additive_correlation(const JointDistribution& dist,
                                            const std::string& a,
                                            const std::string& b) {
  const std::vector<std::string> pair{a, b};
  const double h_pair = entropy(dist, pair);
  const JointDistribution x = xor_marginal(dist, a, b);
  const double h_xor = entropy(x, x.variable_names());
  CorrelationCertificate cert;
  cert.label_a = a;
  cert.label_b = b;
  cert.gap_bits = h_pair - 2.0 * h_xor;
  cert.is_additively_correlated = cert.gap_bits > 0.0;
  return cert;
}

}  // namespace smclab::infotheory
