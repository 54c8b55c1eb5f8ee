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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace smclab::transcript {

using Value = std::uint64_t;

// The complete record a party accumulates during a protocol run: its input,
// the randomness it drew, and the messages it received. Draw entries occur
// only at odd times, message entries only at even times; times are strictly
// increasing within each list.
struct DrawRecord {
  int time = 0;
  Value value = 0;
};

struct MessageRecord {
  int time = 0;
  int sender = 0;
  Value value = 0;
};

class PartyView {
 public:
  int party = 0;  // 1-based
  bool has_input = false;
  Value input = 0;
  std::vector<DrawRecord> draws;
  std::vector<MessageRecord> received;

  // Accessors for protocol rules. Throwing on absent entries keeps rules from
  // silently reading data a party does not possess.
  Value draw_at(int time) const;
  Value message_from(int sender, int time) const;
  // k-th message from `sender` at `time` (0-based), for rounds carrying
  // several messages on one link.
  Value message_from(int sender, int time, std::size_t k) const;

  // Canonical serialization of the information content beyond the input
  // (draws and receptions merged in time order). Two views carry the same
  // information iff their keys match; this is the symbol used for all
  // entropy computations over views.
  std::string canonical_key() const;

  nlohmann::json to_json() const;
};

// A rule evaluates to a value using only the acting party's view.
using ViewRule = std::function<Value(const PartyView&)>;

// A target function of the full input tuple (index i-1 holds party i's
// input; parties without an input contribute 0).
using TargetFn = std::function<Value(const std::vector<Value>&)>;

struct DrawDecl {
  int time = 0;       // odd
  int party = 0;      // 1-based
  std::uint32_t alphabet = 2;  // uniform over {0..alphabet-1}; must be >= 2
};

struct SendDecl {
  int time = 0;       // even
  int sender = 0;
  int recipient = 0;
  ViewRule value;
};

struct OutputDecl {
  int party = 0;
  ViewRule value;
};

// A deterministic protocol on a finite odd time scale T: draws and local
// computation at odd times, transmissions at even times. All nondeterminism
// flows through the declared draws; send/output rules are pure functions of
// the acting party's view. The send schedule (who talks to whom at which
// time) is part of the predetermined protocol; only message values depend on
// views.
class ProtocolSpec {
 public:
  std::string name;
  int party_count = 0;
  int horizon = 1;  // T, odd
  std::vector<std::uint32_t> input_alphabets;  // size party_count; 1 = no input
  std::vector<DrawDecl> draws;
  std::vector<SendDecl> sends;
  std::vector<OutputDecl> outputs;

  // Structural validation; throws std::invalid_argument and sorts draws and
  // sends into canonical schedule order (time, party/sender, declaration
  // order). Call once after assembling a spec.
  void finalize();

  bool has_input(int party) const { return input_alphabets[static_cast<std::size_t>(party - 1)] > 1; }
  const OutputDecl* output_for(int party) const;

  // Number of messages party `recipient` receives from `sender` at `time`.
  std::size_t expected_messages(int sender, int recipient, int time) const;
};

}  // namespace smclab::transcript
