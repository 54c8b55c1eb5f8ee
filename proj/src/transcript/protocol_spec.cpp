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

#include "smclab/transcript/protocol_spec.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace smclab::transcript {

Value PartyView::draw_at(int time) const {
  for (const auto& d : draws) {
    if (d.time == time) return d.value;
  }
  throw std::out_of_range("party " + std::to_string(party) + " has no draw at time " +
                          std::to_string(time));
}

Value PartyView::message_from(int sender, int time) const {
  return message_from(sender, time, 0);
}

Value PartyView::message_from(int sender, int time, std::size_t k) const {
  std::size_t seen = 0;
  for (const auto& m : received) {
    if (m.time == time && m.sender == sender) {
      if (seen == k) return m.value;
      ++seen;
    }
  }
  throw std::out_of_range("party " + std::to_string(party) + " has no message #" +
                          std::to_string(k) + " from " + std::to_string(sender) +
                          " at time " + std::to_string(time));
}

std::string PartyView::canonical_key() const {
  // Draws happen at odd times and receptions at even times, so merging the
  // two lists by time yields one fixed ordering.
  std::string key;
  std::size_t di = 0, mi = 0;
  while (di < draws.size() || mi < received.size()) {
    const bool take_draw =
        mi == received.size() ||
        (di < draws.size() && draws[di].time < received[mi].time);
    if (take_draw) {
      key += 'R';
      key += std::to_string(draws[di].time);
      key += ':';
      key += std::to_string(draws[di].value);
      ++di;
    } else {
      key += 'M';
      key += std::to_string(received[mi].time);
      key += '<';
      key += std::to_string(received[mi].sender);
      key += ':';
      key += std::to_string(received[mi].value);
      ++mi;
    }
    key += ';';
  }
  return key;
}

nlohmann::json PartyView::to_json() const {
  nlohmann::json draws_json = nlohmann::json::array();
  for (const auto& d : draws) draws_json.push_back({{"t", d.time}, {"value", d.value}});
  nlohmann::json recv_json = nlohmann::json::array();
  for (const auto& m : received) {
    recv_json.push_back({{"t", m.time}, {"from", m.sender}, {"value", m.value}});
  }
  nlohmann::json j{{"party", party}, {"draws", draws_json}, {"received", recv_json}};
  if (has_input) {
    j["input"] = input;
  } else {
    j["input"] = nullptr;
  }
  return j;
}

void ProtocolSpec::finalize() {
  if (party_count < 2) throw std::invalid_argument("protocol needs at least two parties");
  if (horizon < 1 || horizon % 2 == 0) throw std::invalid_argument("horizon T must be odd and >= 1");
  if (input_alphabets.size() != static_cast<std::size_t>(party_count)) {
    throw std::invalid_argument("input_alphabets must list every party");
  }
  for (auto a : input_alphabets) {
    if (a == 0) throw std::invalid_argument("input alphabet size must be >= 1");
  }

  auto check_party = [&](int p, const char* what) {
    if (p < 1 || p > party_count) {
      throw std::invalid_argument(std::string(what) + ": party id out of range");
    }
  };

  std::set<std::pair<int, int>> draw_slots;
  for (const auto& d : draws) {
    check_party(d.party, "draw");
    if (d.time < 1 || d.time > horizon || d.time % 2 == 0) {
      throw std::invalid_argument("draws are allowed only at odd times within the horizon");
    }
    if (d.alphabet < 2) throw std::invalid_argument("declared draws need alphabet >= 2");
    if (!draw_slots.insert({d.time, d.party}).second) {
      throw std::invalid_argument("at most one randomness declaration per (time, party)");
    }
  }
  for (const auto& s : sends) {
    check_party(s.sender, "send");
    check_party(s.recipient, "send");
    if (s.sender == s.recipient) throw std::invalid_argument("a party cannot message itself");
    if (s.time < 2 || s.time >= horizon || s.time % 2 == 1) {
      throw std::invalid_argument("transmissions are allowed only at even times below the horizon");
    }
    if (!s.value) throw std::invalid_argument("send declaration without a value rule");
  }
  std::set<int> output_parties;
  for (const auto& o : outputs) {
    check_party(o.party, "output");
    if (!o.value) throw std::invalid_argument("output declaration without a value rule");
    if (!output_parties.insert(o.party).second) {
      throw std::invalid_argument("at most one output rule per party");
    }
  }

  std::stable_sort(draws.begin(), draws.end(), [](const DrawDecl& a, const DrawDecl& b) {
    return a.time != b.time ? a.time < b.time : a.party < b.party;
  });
  std::stable_sort(sends.begin(), sends.end(), [](const SendDecl& a, const SendDecl& b) {
    return a.time != b.time ? a.time < b.time : a.sender < b.sender;
  });
  std::stable_sort(outputs.begin(), outputs.end(),
                   [](const OutputDecl& a, const OutputDecl& b) { return a.party < b.party; });
}

const OutputDecl* ProtocolSpec::output_for(int party) const {
  for (const auto& o : outputs) {
    if (o.party == party) return &o;
  }
  return nullptr;
}

std::size_t ProtocolSpec::expected_messages(int sender, int recipient, int time) const {
  std::size_t count = 0;
  for (const auto& s : sends) {
    if (s.time == time && s.sender == sender && s.recipient == recipient) ++count;
  }
  return count;
}

}  // namespace smclab::transcript
