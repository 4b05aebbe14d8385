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

#include "rfg/game.hpp"
#include "rfg/objective.hpp"
#include "rfg/strategy.hpp"

namespace rfg {

/// Actions of `player` that send the play to the sink whatever the opponent
/// does. Empty when the game has no sink or at the sink itself.
std::vector<ActionId> illegal_actions(const Game& game, StateId s, Player player);

/// Exact probability that the play from `init` visits the target at some
/// position 0..horizon. A null policy is accepted for a player with a single
/// action. Throws HorizonMismatch when a policy is shorter than the
/// objective, UndefinedHistory when a policy has no entry for a history that
/// occurs, and Inadmissible when it puts weight on an illegal action.
Rational evaluate_fixed(const Game& game, StateId init, const Policy* p1, const Policy* p2,
                        const BoundedReach& objective);

}  // namespace rfg
