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

#include "smclab/transcript/sparse_joint.hpp"

#include <stdexcept>

#include "smclab/common/math.hpp"

namespace smclab::transcript {

std::size_t SparseJoint::VecHash::operator()(const std::vector<std::uint32_t>& v) const noexcept {
  // FNV-1a over the raw coordinates.
  std::size_t h = 1469598103934665603ULL;
  for (auto x : v) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

void SparseJoint::add(std::span<const std::uint32_t> point, double probability) {
  if (point.size() != arity_) throw std::invalid_argument("support point arity mismatch");
  if (probability == 0.0) return;
  mass_[std::vector<std::uint32_t>(point.begin(), point.end())] += probability;
}

double SparseJoint::total_mass() const {
  double m = 0.0;
  for (const auto& [_, p] : mass_) m += p;
  return m;
}

double SparseJoint::subset_entropy(std::span<const std::size_t> coords) const {
  for (auto c : coords) {
    if (c >= arity_) throw std::out_of_range("coordinate index out of range");
  }
  if (coords.empty()) return 0.0;
  std::unordered_map<std::vector<std::uint32_t>, double, VecHash> projected;
  projected.reserve(mass_.size());
  std::vector<std::uint32_t> key(coords.size());
  for (const auto& [point, p] : mass_) {
    for (std::size_t i = 0; i < coords.size(); ++i) key[i] = point[coords[i]];
    projected[key] += p;
  }
  double h = 0.0;
  for (const auto& [_, p] : projected) h += entropy_term(p);
  return h;
}

double SparseJoint::conditional_entropy(std::span<const std::size_t> targets,
                                        std::span<const std::size_t> given) const {
  std::vector<std::size_t> joint(targets.begin(), targets.end());
  joint.insert(joint.end(), given.begin(), given.end());
  return subset_entropy(joint) - subset_entropy(given);
}

}  // namespace smclab::transcript
