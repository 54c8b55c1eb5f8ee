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
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace smclab::infotheory {

// Exact joint probability table over a small set of finite-alphabet
// variables. The table is dense and row-major with the last variable varying
// fastest. Immutable after construction.
//
// The dense representation is deliberately capped at 24 total bits of joint
// alphabet (product of alphabet sizes <= 2^24); larger requests are refused
// rather than approximated.
class JointDistribution {
 public:
  static constexpr std::uint64_t kMaxCells = std::uint64_t{1} << 24;

  JointDistribution(std::vector<std::string> variable_names,
                    std::vector<std::uint32_t> alphabet_sizes,
                    std::vector<double> probabilities);

  // Presets.
  static JointDistribution uniform_independent(std::size_t m);  // m uniform bits X1..Xm
  static JointDistribution bsc_pair(double p);      // X ~ Ber(0.5), Y = X xor Ber(p)
  static JointDistribution bsc_triple(double p);    // bsc_pair plus independent Z ~ Ber(0.5)
  static JointDistribution point_mass(std::vector<std::string> names,
                                      std::vector<std::uint32_t> sizes,
                                      std::vector<std::uint32_t> values);

  // {"variables":[{"name","alphabet_size"}],"probabilities":[...]} or
  // {"preset":"bsc_pair","p":0.1} / {"preset":"uniform_independent","m":3} /
  // {"preset":"bsc_triple","p":0.1}.
  static JointDistribution from_json(const nlohmann::json& spec);
  nlohmann::json to_json() const;

  std::size_t variable_count() const { return names_.size(); }
  const std::vector<std::string>& variable_names() const { return names_; }
  const std::vector<std::uint32_t>& alphabet_sizes() const { return sizes_; }
  const std::vector<double>& probabilities() const { return table_; }

  // Index of a named variable; throws std::invalid_argument on unknown label.
  std::size_t index_of(const std::string& label) const;
  std::uint32_t alphabet_size(const std::string& label) const;

  double probability(std::span<const std::uint32_t> values) const;

  // Marginal distribution on the given labels, in the given order.
  // Labels must be distinct and present.
  JointDistribution marginal(std::span<const std::string> subset) const;

  // Cell index arithmetic (row-major, last variable fastest).
  std::size_t cell_index(std::span<const std::uint32_t> values) const;
  void decode_cell(std::size_t index, std::span<std::uint32_t> values_out) const;
  std::size_t cell_count() const { return table_.size(); }

 private:
  std::vector<std::string> names_;
  std::vector<std::uint32_t> sizes_;
  std::vector<double> table_;
};

}  // namespace smclab::infotheory
