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

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rfg/game.hpp"

namespace rfg {

/// Sorted, duplicate-free list of state ids.
using StateSet = std::vector<StateId>;

StateSet make_state_set(std::vector<StateId> states);
/// Resolves names against the game; throws UnknownIdentifier.
StateSet make_state_set(const Game& game, std::span<const std::string> names);
bool contains(const StateSet& set, StateId s);
/// Membership vector of length num_states.
std::vector<bool> indicator(const StateSet& set, std::size_t num_states);

struct Reach {
  StateSet target;
  friend bool operator==(const Reach&, const Reach&) = default;
};
struct Safety {
  StateSet target;  // the states to stay in
  friend bool operator==(const Safety&, const Safety&) = default;
};
struct Buechi {
  StateSet target;
  friend bool operator==(const Buechi&, const Buechi&) = default;
};
struct CoBuechi {
  StateSet target;
  friend bool operator==(const CoBuechi&, const CoBuechi&) = default;
};
/// Player 1 wins when the minimum priority seen infinitely often is even.
struct Parity {
  std::vector<unsigned> priority;  // indexed by state id
  friend bool operator==(const Parity&, const Parity&) = default;
};
/// Target visited at some position 0..horizon of the play.
struct BoundedReach {
  StateSet target;
  std::size_t horizon = 0;
  friend bool operator==(const BoundedReach&, const BoundedReach&) = default;
};

using Objective = std::variant<Reach, Safety, Buechi, CoBuechi, Parity, BoundedReach>;

const char* objective_keyword(const Objective& objective);

/// Checks state ids against the game and that a parity map is total.
void check_objective(const Game& game, const Objective& objective);

}  // namespace rfg
