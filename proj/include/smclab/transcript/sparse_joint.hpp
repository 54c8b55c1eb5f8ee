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
#include <span>
#include <unordered_map>
#include <vector>

namespace smclab::transcript {

// Sparse exact joint distribution over dictionary-encoded variables. The
// analyzer's view alphabets can be large but the support is bounded by the
// enumeration size, so entropies are computed by projecting support points
// rather than through a dense table.
class SparseJoint {
 public:
  explicit SparseJoint(std::size_t variable_count) : arity_(variable_count) {}

  void add(std::span<const std::uint32_t> point, double probability);

  std::size_t variable_count() const { return arity_; }
  std::size_t support_size() const { return mass_.size(); }
  double total_mass() const;

  // Shannon entropy (bits) of the marginal on the given coordinates.
  // An empty coordinate list has zero entropy.
  double subset_entropy(std::span<const std::size_t> coords) const;

  // H(targets | given) via the chain rule on the union.
  double conditional_entropy(std::span<const std::size_t> targets,
                             std::span<const std::size_t> given) const;

 private:
  struct VecHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept;
  };

  std::size_t arity_;
  std::unordered_map<std::vector<std::uint32_t>, double, VecHash> mass_;
};

}  // namespace smclab::transcript
