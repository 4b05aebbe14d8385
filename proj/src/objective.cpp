// Copyright 2026 The rfgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rfg/objective.hpp"

#include <algorithm>

#include "rfg/error.hpp"

namespace rfg {

StateSet make_state_set(std::vector<StateId> states) {
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
  return states;
}

StateSet make_state_set(const Game& game, std::span<const std::string> names) {
  std::vector<StateId> ids;
  for (const auto& n : names) ids.push_back(game.state(n));
  return make_state_set(std::move(ids));
}

bool contains(const StateSet& set, StateId s) { return std::binary_search(set.begin(), set.end(), s); }

std::vector<bool> indicator(const StateSet& set, std::size_t num_states) {
  std::vector<bool> in(num_states, false);
  for (StateId s : set) {
    if (s < num_states) in[s] = true;
  }
  return in;
}

const char* objective_keyword(const Objective& objective) {
  struct Visitor {
    const char* operator()(const Reach&) const { return "reach"; }
    const char* operator()(const Safety&) const { return "safety"; }
    const char* operator()(const Buechi&) const { return "buchi"; }
    const char* operator()(const CoBuechi&) const { return "cobuchi"; }
    const char* operator()(const Parity&) const { return "parity"; }
    const char* operator()(const BoundedReach&) const { return "bounded-reach"; }
  };
  return std::visit(Visitor{}, objective);
}

void check_objective(const Game& game, const Objective& objective) {
  auto check_set = [&](const StateSet& set) {
    for (StateId s : set) {
      if (s >= game.num_states()) {
        throw Error(ErrorCode::UnknownIdentifier, "objective names unknown state id " + std::to_string(s));
      }
    }
  };
  if (const auto* parity = std::get_if<Parity>(&objective)) {
    if (parity->priority.size() != game.num_states()) {
      throw Error(ErrorCode::InvalidArgument, "parity priorities must cover every state");
    }
    return;
  }
  std::visit(
      [&](const auto& o) {
        if constexpr (!std::is_same_v<std::decay_t<decltype(o)>, Parity>) check_set(o.target);
      },
      objective);
}

}  // namespace rfg
