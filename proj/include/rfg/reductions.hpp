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
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rfg/game.hpp"
#include "rfg/objective.hpp"
#include "rfg/strategy.hpp"

namespace rfg {

enum class ReductionKind { Separate, Uniformize, CocGadget, OstGadget, NaiveBinary };

const char* to_string(ReductionKind kind);
std::optional<ReductionKind> parse_reduction_kind(std::string_view text);

/// How plays of the original game map onto plays of the reduced one.
enum class Stutter {
  None,         // one reduced step per original step
  Double,       // s0 s0' s1 s1' ...
  Probabilistic // one extra step after every probabilistic state
};

/// Correspondence between an original game and its reduction. State ids
/// refer to the original game (`embedding` keys, `succ`, `probabilistic`)
/// or to the reduced game (`embedding` values, `aux` keys, `sink`).
struct ReductionWitness {
  ReductionKind kind = ReductionKind::Separate;
  std::size_t n = 1;
  Stutter stutter = Stutter::None;
  std::size_t original_states = 0;
  std::size_t reduced_states = 0;
  std::vector<StateId> embedding;                // original -> reduced
  std::map<StateId, StateId> aux;                // reduced auxiliary state -> original source
  std::vector<bool> probabilistic;               // original probabilistic side
  std::map<StateId, std::vector<StateId>> succ;  // slot tuples, original ids
  std::optional<StateId> sink;
  Player informed = Player::Two;                 // complete-observation side of the turn-based gadget

  friend bool operator==(const ReductionWitness&, const ReductionWitness&) = default;
};

struct Reduction {
  Game game;
  ReductionWitness witness;
};

/// Largest r with every value an integer multiple of r. Throws
/// InvalidArgument on an empty list or a non-positive value.
Rational gcd_of_probabilities(const std::vector<Rational>& values);

/// Every positive probability appearing in the transition function.
std::vector<Rational> all_probabilities(const Game& game);

/// Splits every state s into s itself, which moves deterministically, and
/// pair states (s,a,b) carrying delta(s,a,b). Turn-based states route
/// through the canonical smallest action of the player that does not move.
Reduction separate_interaction(const Game& game);

/// Same game; the witness holds the global arity n and the slot tuples.
/// Throws NotSeparated.
Reduction uniformize(const Game& game);

/// Replaces every probabilistic state by a concurrent deterministic state
/// whose gadget matrix is the circulant Latin square of its slots. With no
/// `n` the arity comes from the gcd of all probabilities. Throws
/// NotSeparated or NotUniform.
Reduction coc_gadget(const Game& game, std::optional<std::size_t> n = std::nullopt);

/// Replaces every probabilistic state s by a turn of the `informed` player
/// choosing (s,i) followed by a turn of the other player choosing j, landing
/// on slot (i+j) mod n. Illegal actions lead to a fresh absorbing sink.
Reduction ost_gadget(const Game& game, Player informed = Player::Two, std::optional<std::size_t> n = std::nullopt);

/// Binary-tree simulation of every probabilistic distribution with fair
/// coins and loops back to the source. Only correct under complete
/// observation; kept as a counterexample generator. Throws NotSeparated.
Reduction naive_binary_reduction(const Game& game);

/// Maps an objective of the original game onto the reduced game. Auxiliary
/// states inherit their source's membership, except for reachability where
/// they are excluded; the sink is always losing for Player 1. Throws
/// IncompatibleWitness for bounded reachability through the naive binary
/// reduction, whose step count is unbounded.
Objective lift_objective(const Objective& objective, const ReductionWitness& witness);

/// Horizon on the reduced game covering original horizon `h`. For the
/// turn-based gadget this is h + ceil(h/2), which is exact whichever side
/// the play starts on because action and probabilistic states alternate.
std::size_t lift_horizon(std::size_t h, const ReductionWitness& witness);

/// Policy on the reduced game copying `original` at embedded positions and
/// mixing uniformly over gadget actions at gadget positions. The original
/// policy must outlive the returned one.
std::unique_ptr<Policy> translate_policy(const Policy& original, const Game& original_game,
                                         const Game& reduced_game, const ReductionWitness& witness, StateId init);

/// Table form of a policy over the histories reachable from `init`.
Strategy materialize(const Policy& policy, const Game& game, StateId init, std::size_t horizon);

/// Gadget action names "#g0".."#g<n-1>", zero-padded so that lexicographic
/// and numeric order agree.
std::vector<std::string> gadget_action_names(std::size_t n);

}  // namespace rfg
