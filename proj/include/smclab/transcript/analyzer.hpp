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

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "smclab/infotheory/joint_distribution.hpp"
#include "smclab/transcript/engine.hpp"
#include "smclab/transcript/protocol_spec.hpp"

namespace smclab::transcript {

// Exact per-party verdicts. accuracy_residual = H(f_i | view_i, input_i)
// must be 0 for a correct protocol. security_residual is the leak
// I(other inputs ; view_i | input_i, f_i) =
//   H(X_~i | X_i, f_i) - H(X_~i | X_i, view_i, f_i),
// nonnegative up to rounding and 0 exactly when the party learns nothing
// beyond what the function value reveals.
struct PartyAnalysis {
  int party = 0;
  double accuracy_residual = 0.0;
  double security_residual = 0.0;
  bool accuracy_pass = false;
  bool security_pass = false;
  // Every executed branch produced an output equal to the target (parties
  // with both an output rule and a target function).
  bool output_matches_target = true;
};

struct AnalysisReport {
  std::string protocol;
  double randomness_cost = 0.0;  // H(all views | all inputs), bits
  std::vector<PartyAnalysis> parties;
  bool all_pass = false;
  double joint_mass = 0.0;       // conservation diagnostic; 1 within 1e-12
  std::size_t enumerated_cells = 0;

  nlohmann::json to_json() const;
};

struct AnalyzeOptions {
  // Distribution over the inputs of the input-bearing parties, in party
  // order. Defaults to independent uniform (the model's baseline).
  std::optional<infotheory::JointDistribution> input_distribution;
  std::size_t max_cells = std::size_t{1} << 24;
  double tolerance = 1e-9;
};

// Builds the exact joint law of (inputs, views, targets) by enumerating every
// input tuple against every randomness tuple, then evaluates the accuracy and
// security entropy equalities and the randomness cost. Views are canonically
// serialized before entropy computation so equal-information views coincide.
//
// `targets` holds one function per party; an empty std::function means the
// party has no function to compute (its accuracy residual is 0 and its
// security equality conditions on nothing beyond its input).
AnalysisReport analyze(const ProtocolSpec& spec,
                       const std::vector<TargetFn>& targets,
                       const AnalyzeOptions& options = {});

// True iff the measured cost is at least `lower_bound` (up to tolerance).
// The report should come from a spec that passed accuracy and security.
bool converse_check(const AnalysisReport& report, double lower_bound,
                    double tolerance = 1e-9);

}  // namespace smclab::transcript
