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

#include "smclab/infotheory/joint_distribution.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace smclab::infotheory {

namespace {

constexpr double kMassTol = 1e-12;

void check_parameter_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("crossover probability must lie in [0, 1]");
  }
}

}  // namespace

JointDistribution::JointDistribution(std::vector<std::string> variable_names,
                                     std::vector<std::uint32_t> alphabet_sizes,
                                     std::vector<double> probabilities)
    : names_(std::move(variable_names)),
      sizes_(std::move(alphabet_sizes)),
      table_(std::move(probabilities)) {
  if (names_.empty()) throw std::invalid_argument("distribution needs at least one variable");
  if (names_.size() != sizes_.size()) {
    throw std::invalid_argument("variable_names and alphabet_sizes length mismatch");
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(name).second) {
      throw std::invalid_argument("duplicate variable name: " + name);
    }
  }
  std::uint64_t cells = 1;
  for (auto s : sizes_) {
    if (s == 0) throw std::invalid_argument("alphabet size must be positive");
    cells *= s;
    if (cells > kMaxCells) {
      throw std::invalid_argument("joint alphabet exceeds 2^24 cells; dense tables are refused");
    }
  }
  if (table_.size() != cells) {
    throw std::invalid_argument("probability table dimension mismatch");
  }
  double mass = 0.0;
  for (double p : table_) {
    if (!(p >= 0.0)) throw std::invalid_argument("negative or NaN probability");
    mass += p;
  }
  if (std::abs(mass - 1.0) > kMassTol) {
    throw std::invalid_argument("probability table is not normalized");
  }
}

JointDistribution JointDistribution::uniform_independent(std::size_t m) {
  if (m == 0 || m > 24) throw std::invalid_argument("uniform_independent requires 1 <= m <= 24");
  std::vector<std::string> names;
  names.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) names.push_back("X" + std::to_string(i));
  const std::size_t cells = std::size_t{1} << m;
  return JointDistribution(std::move(names), std::vector<std::uint32_t>(m, 2),
                           std::vector<double>(cells, 1.0 / static_cast<double>(cells)));
}

JointDistribution JointDistribution::bsc_pair(double p) {
  check_parameter_p(p);
  // Row-major over (X, Y): cells (0,0),(0,1),(1,0),(1,1).
  return JointDistribution({"X", "Y"}, {2, 2},
                           {(1.0 - p) / 2.0, p / 2.0, p / 2.0, (1.0 - p) / 2.0});
}

JointDistribution JointDistribution::bsc_triple(double p) {
  check_parameter_p(p);
  std::vector<double> table(8, 0.0);
  const double pair[2][2] = {{(1.0 - p) / 2.0, p / 2.0}, {p / 2.0, (1.0 - p) / 2.0}};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) table[static_cast<std::size_t>(4 * x + 2 * y + z)] = pair[x][y] * 0.5;
  return JointDistribution({"X", "Y", "Z"}, {2, 2, 2}, std::move(table));
}

JointDistribution JointDistribution::point_mass(std::vector<std::string> names,
                                                std::vector<std::uint32_t> sizes,
                                                std::vector<std::uint32_t> values) {
  if (values.size() != sizes.size()) throw std::invalid_argument("point_mass value count mismatch");
  std::uint64_t cells = 1, index = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (values[i] >= sizes[i]) throw std::invalid_argument("point_mass value out of alphabet");
    index = index * sizes[i] + values[i];
    cells *= sizes[i];
  }
  std::vector<double> table(cells, 0.0);
  table[index] = 1.0;
  return JointDistribution(std::move(names), std::move(sizes), std::move(table));
}

JointDistribution JointDistribution::from_json(const nlohmann::json& spec) {
  if (spec.contains("preset")) {
    const std::string preset = spec.at("preset").get<std::string>();
    if (preset == "bsc_pair") return bsc_pair(spec.at("p").get<double>());
    if (preset == "bsc_triple") return bsc_triple(spec.at("p").get<double>());
    if (preset == "uniform_independent") {
      return uniform_independent(spec.at("m").get<std::size_t>());
    }
    throw std::invalid_argument("unknown distribution preset: " + preset);
  }
  std::vector<std::string> names;
  std::vector<std::uint32_t> sizes;
  for (const auto& v : spec.at("variables")) {
    names.push_back(v.at("name").get<std::string>());
    sizes.push_back(v.at("alphabet_size").get<std::uint32_t>());
  }
  return JointDistribution(std::move(names), std::move(sizes),
                           spec.at("probabilities").get<std::vector<double>>());
}

nlohmann::json JointDistribution::to_json() const {
  nlohmann::json vars = nlohmann::json::array();
  for (std::size_t i = 0; i < names_.size(); ++i) {
    vars.push_back({{"name", names_[i]}, {"alphabet_size", sizes_[i]}});
  }
  return {{"variables", vars}, {"probabilities", table_}};
}

std::size_t JointDistribution::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == label) return i;
  }
  throw std::invalid_argument("unknown variable label: " + label);
}

std::uint32_t JointDistribution::alphabet_size(const std::string& label) const {
  return sizes_[index_of(label)];
}

std::size_t JointDistribution::cell_index(std::span<const std::uint32_t> values) const {
  if (values.size() != sizes_.size()) throw std::invalid_argument("value tuple arity mismatch");
  std::size_t index = 0;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (values[i] >= sizes_[i]) throw std::invalid_argument("value out of alphabet range");
    index = index * sizes_[i] + values[i];
  }
  return index;
}

void JointDistribution::decode_cell(std::size_t index, std::span<std::uint32_t> values_out) const {
  for (std::size_t i = sizes_.size(); i-- > 0;) {
    values_out[i] = static_cast<std::uint32_t>(index % sizes_[i]);
    index /= sizes_[i];
  }
}

double JointDistribution::probability(std::span<const std::uint32_t> values) const {
  return table_[cell_index(values)];
}

JointDistribution JointDistribution::marginal(std::span<const std::string> subset) const {
  if (subset.empty()) throw std::invalid_argument("marginal requires a non-empty subset");
  std::vector<std::size_t> axes;
  axes.reserve(subset.size());
  std::unordered_set<std::string> seen;
  for (const auto& label : subset) {
    if (!seen.insert(label).second) throw std::invalid_argument("repeated label: " + label);
    axes.push_back(index_of(label));
  }
  std::vector<std::uint32_t> sub_sizes;
  sub_sizes.reserve(axes.size());
  std::uint64_t sub_cells = 1;
  for (auto a : axes) {
    sub_sizes.push_back(sizes_[a]);
    sub_cells *= sizes_[a];
  }
  std::vector<double> sub_table(sub_cells, 0.0);
  std::vector<std::uint32_t> values(sizes_.size());
  for (std::size_t cell = 0; cell < table_.size(); ++cell) {
    if (table_[cell] == 0.0) continue;
    decode_cell(cell, values);
    std::size_t sub_index = 0;
    for (std::size_t i = 0; i < axes.size(); ++i) {
      sub_index = sub_index * sub_sizes[i] + values[axes[i]];
    }
    sub_table[sub_index] += table_[cell];
  }
  std::vector<std::string> sub_names(subset.begin(), subset.end());
  return JointDistribution(std::move(sub_names), std::move(sub_sizes), std::move(sub_table));
}

}  // namespace smclab::infotheory
