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

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "smclab/transcript/protocol_spec.hpp"

namespace smclab::transcript {

// Raised when a rule's output varies while the acting party's view is
// unchanged: the rule is reading information outside the view (or is
// nondeterministic), which breaks the privacy of the channels.
class PrivacyViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LedgerEntry {
  int time = 0;
  int sender = 0;
  int recipient = 0;
  Value value = 0;
};

class ProtocolTranscript {
 public:
  std::string protocol;
  std::vector<std::optional<Value>> inputs;   // per party; nullopt = no input
  std::vector<PartyView> views;
  std::vector<std::optional<Value>> outputs;  // per party
  std::vector<LedgerEntry> ledger;            // canonical (time, sender, decl) order

  nlohmann::json to_json() const;
  // Canonical byte serialization; equal transcripts serialize identically.
  std::string serialize() const;

  // Every received message appears exactly once in the send ledger.
  void check_ledger_consistency() const;
};

struct ExecuteOptions {
  // Re-run the protocol under single-variable counterfactuals (each input and
  // each draw cycled through its alphabet) and require rule outputs to agree
  // wherever the acting party's view is unchanged. Catches rules that read
  // another party's data directly. analyze() performs the exhaustive version
  // of this check, so it disables the probe on its inner loop.
  bool privacy_probe = true;
};

// Deterministic execution: same spec, inputs and randomness_choices produce a
// byte-identical transcript. `randomness_choices` supplies one value per
// declared draw, in the spec's canonical draw order.
ProtocolTranscript execute(const ProtocolSpec& spec,
                           const std::vector<Value>& inputs,
                           const std::vector<Value>& randomness_choices,
                           const ExecuteOptions& options = {});

// Derives draw values from per-party seeds (each party consumes its own
// deterministic stream in time order). Networked execution uses the same
// derivation, which is what makes transcripts comparable byte-for-byte.
std::vector<Value> derive_randomness(const ProtocolSpec& spec,
                                     const std::vector<std::uint64_t>& party_seeds);

ProtocolTranscript execute_seeded(const ProtocolSpec& spec,
                                  const std::vector<Value>& inputs,
                                  const std::vector<std::uint64_t>& party_seeds,
                                  const ExecuteOptions& options = {});

namespace detail {

// Accumulates (rule, view) -> output observations across runs and throws
// PrivacyViolation on any inconsistency. The analyzer shares one checker
// across its whole enumeration, which makes the privacy check exhaustive
// over the input and randomness space.
class RuleConsistencyChecker {
 public:
  void record(std::size_t rule_id, const std::string& view_key, Value value);

 private:
  std::map<std::pair<std::size_t, std::string>, Value> seen_;
};

// Single execution pass without argument validation or probes; the checker
// may be null.
ProtocolTranscript execute_raw(const ProtocolSpec& spec, const std::vector<Value>& inputs,
                               const std::vector<Value>& randomness,
                               RuleConsistencyChecker* checker);

}  // namespace detail

}  // namespace smclab::transcript
