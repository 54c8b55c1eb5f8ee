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

#include "smclab/transcript/engine.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "smclab/common/rng.hpp"

namespace smclab::transcript {

namespace {

void validate_run_arguments(const ProtocolSpec& spec, const std::vector<Value>& inputs,
                            const std::vector<Value>& randomness) {
  if (inputs.size() != static_cast<std::size_t>(spec.party_count)) {
    throw std::invalid_argument("input tuple arity mismatch");
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i] >= spec.input_alphabets[i]) {
      throw std::invalid_argument("input value out of range for party " + std::to_string(i + 1));
    }
  }
  if (randomness.size() != spec.draws.size()) {
    throw std::invalid_argument("one randomness choice required per declared draw");
  }
  for (std::size_t i = 0; i < randomness.size(); ++i) {
    if (randomness[i] >= spec.draws[i].alphabet) {
      throw std::invalid_argument("randomness choice out of declared alphabet");
    }
  }
}

}  // namespace

namespace detail {

void RuleConsistencyChecker::record(std::size_t rule_id, const std::string& view_key,
                                    Value value) {
  auto [it, inserted] = seen_.try_emplace({rule_id, view_key}, value);
  if (!inserted && it->second != value) {
    throw PrivacyViolation(
        "rule output changed while the acting party's view did not: "
        "the rule reads information outside the view");
  }
}

// Rule ids: send declaration index, or sends.size()+party for output rules.
ProtocolTranscript execute_raw(const ProtocolSpec& spec, const std::vector<Value>& inputs,
                               const std::vector<Value>& randomness,
                               RuleConsistencyChecker* observations) {
  ProtocolTranscript t;
  t.protocol = spec.name;
  t.views.resize(static_cast<std::size_t>(spec.party_count));
  t.inputs.resize(static_cast<std::size_t>(spec.party_count));
  t.outputs.resize(static_cast<std::size_t>(spec.party_count));
  for (int p = 1; p <= spec.party_count; ++p) {
    auto& view = t.views[static_cast<std::size_t>(p - 1)];
    view.party = p;
    view.has_input = spec.has_input(p);
    view.input = inputs[static_cast<std::size_t>(p - 1)];
    if (view.has_input) t.inputs[static_cast<std::size_t>(p - 1)] = view.input;
  }

  std::size_t draw_cursor = 0;
  std::size_t send_cursor = 0;
  for (int time = 1; time <= spec.horizon; ++time) {
    if (time % 2 == 1) {
      while (draw_cursor < spec.draws.size() && spec.draws[draw_cursor].time == time) {
        const auto& d = spec.draws[draw_cursor];
        t.views[static_cast<std::size_t>(d.party - 1)].draws.push_back(
            {time, randomness[draw_cursor]});
        ++draw_cursor;
      }
    } else {
      // Evaluate every rule against the pre-round views, then deliver; a
      // message sent at time t is available to its recipient from t+1 on.
      const std::size_t first = send_cursor;
      std::vector<Value> values;
      while (send_cursor < spec.sends.size() && spec.sends[send_cursor].time == time) {
        const auto& s = spec.sends[send_cursor];
        const auto& sender_view = t.views[static_cast<std::size_t>(s.sender - 1)];
        const Value v = s.value(sender_view);
        if (observations != nullptr) {
          observations->record(send_cursor, sender_view.canonical_key(), v);
        }
        values.push_back(v);
        ++send_cursor;
      }
      for (std::size_t k = first; k < send_cursor; ++k) {
        const auto& s = spec.sends[k];
        const Value v = values[k - first];
        t.views[static_cast<std::size_t>(s.recipient - 1)].received.push_back(
            {time, s.sender, v});
        t.ledger.push_back({time, s.sender, s.recipient, v});
      }
    }
  }

  for (const auto& o : spec.outputs) {
    const auto& view = t.views[static_cast<std::size_t>(o.party - 1)];
    const Value v = o.value(view);
    if (observations != nullptr) {
      observations->record(spec.sends.size() + static_cast<std::size_t>(o.party),
                           view.canonical_key(), v);
    }
    t.outputs[static_cast<std::size_t>(o.party - 1)] = v;
  }
  return t;
}

}  // namespace detail

ProtocolTranscript execute(const ProtocolSpec& spec, const std::vector<Value>& inputs,
                           const std::vector<Value>& randomness_choices,
                           const ExecuteOptions& options) {
  validate_run_arguments(spec, inputs, randomness_choices);
  if (!options.privacy_probe) {
    return detail::execute_raw(spec, inputs, randomness_choices, nullptr);
  }

  detail::RuleConsistencyChecker obs;
  ProtocolTranscript base = detail::execute_raw(spec, inputs, randomness_choices, &obs);

  // Counterfactual probes: cycle each input and each draw through its
  // alphabet. A rule that is a pure function of the view keeps its output
  // wherever the view is unchanged; anything else is an out-of-view read.
  for (int p = 1; p <= spec.party_count; ++p) {
    const auto alphabet = spec.input_alphabets[static_cast<std::size_t>(p - 1)];
    if (alphabet < 2) continue;
    std::vector<Value> probe = inputs;
    for (Value delta = 1; delta < alphabet; ++delta) {
      probe[static_cast<std::size_t>(p - 1)] = (inputs[static_cast<std::size_t>(p - 1)] + delta) % alphabet;
      run_once(spec, probe, randomness_choices, &obs);
    }
  }
  for (std::size_t d = 0; d < spec.draws.size(); ++d) {
    std::vector<Value> probe = randomness_choices;
    for (Value delta = 1; delta < spec.draws[d].alphabet; ++delta) {
      probe[d] = (randomness_choices[d] + delta) % spec.draws[d].alphabet;
      run_once(spec, inputs, probe, &obs);
    }
  }
  return base;
}

std::vector<Value> derive_randomness(const ProtocolSpec& spec,
                                     const std::vector<std::uint64_t>& party_seeds) {
  if (party_seeds.size() != static_cast<std::size_t>(spec.party_count)) {
    throw std::invalid_argument("one seed required per party");
  }
  std::vector<Rng> rngs;
  rngs.reserve(party_seeds.size());
  for (auto s : party_seeds) rngs.emplace_back(s);
  std::vector<Value> choices;
  choices.reserve(spec.draws.size());
  // Draws are in canonical (time, party) order, so each party consumes its
  // own stream in time order.
  for (const auto& d : spec.draws) {
    choices.push_back(rngs[static_cast<std::size_t>(d.party - 1)].uniform_below(d.alphabet));
  }
  return choices;
}

ProtocolTranscript execute_seeded(const ProtocolSpec& spec, const std::vector<Value>& inputs,
                                  const std::vector<std::uint64_t>& party_seeds,
                                  const ExecuteOptions& options) {
  return execute(spec, inputs, derive_randomness(spec, party_seeds), options);
}

nlohmann::json ProtocolTranscript::to_json() const {
  nlohmann::json inputs_json = nlohmann::json::array();
  for (const auto& in : inputs) {
    if (in.has_value()) {
      inputs_json.push_back(*in);
    } else {
      inputs_json.push_back(nullptr);
    }
  }
  nlohmann::json views_json = nlohmann::json::array();
  for (const auto& v : views) views_json.push_back(v.to_json());
  nlohmann::json outputs_json = nlohmann::json::array();
  for (const auto& out : outputs) {
    if (out.has_value()) {
      outputs_json.push_back(*out);
    } else {
      outputs_json.push_back(nullptr);
    }
  }
  nlohmann::json ledger_json = nlohmann::json::array();
  for (const auto& e : ledger) {
    ledger_json.push_back(
        {{"t", e.time}, {"from", e.sender}, {"to", e.recipient}, {"value", e.value}});
  }
  return {{"format_version", 1}, {"protocol", protocol},     {"inputs", inputs_json},
          {"views", views_json}, {"outputs", outputs_json},  {"ledger", ledger_json}};
}

std::string ProtocolTranscript::serialize() const { return to_json().dump(); }

void ProtocolTranscript::check_ledger_consistency() const {
  // Count multiplicities of (time, sender, recipient, value) in the ledger
  // and in the receive records; they must match exactly.
  std::map<std::tuple<int, int, int, Value>, long> balance;
  for (const auto& e : ledger) {
    ++balance[{e.time, e.sender, e.recipient, e.value}];
  }
  for (const auto& view : views) {
    for (const auto& m : view.received) {
      --balance[{m.time, m.sender, view.party, m.value}];
    }
  }
  for (const auto& [key, count] : balance) {
    if (count != 0) {
      throw std::logic_error("transcript ledger inconsistent with receive records");
    }
  }
}

}  // namespace smclab::transcript
