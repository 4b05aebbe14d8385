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
#include <functional>
#include <variant>
#include <vector>

#include "rfg/game.hpp"
#include "rfg/objective.hpp"

namespace rfg {

struct ValueVector {
  enum class Mode { Exact, Approx };

  Mode mode = Mode::Exact;
  std::vector<Rational> exact;  // filled in Exact mode
  std::vector<double> approx;   // filled in Approx mode
  double tolerance = 0.0;
  std::size_t iterations = 0;

  std::size_t size() const { return mode == Mode::Exact ? exact.size() : approx.size(); }
  double at(StateId s) const { return mode == Mode::Exact ? exact[s].to_double() : approx[s]; }
};

struct ShapleyOptions {
  double tolerance = 1e-9;
  std::size_t max_iterations = 100000;
  /// Called with every iterate, starting with the target indicator.
  std::function<void(std::size_t, const std::vector<double>&)> observer;
};

/// Value iteration for reachability in a complete-observation concurrent
/// game, from below. Each step solves one matrix game per state. Throws
/// NotCompleteObservation, or InvalidArgument on an empty target.
ValueVector concurrent_reach_value(const Game& game, const StateSet& target, const ShapleyOptions& options = {});

/// The player choosing actions in an MDP: Player 1 maximizes, Player 2
/// minimizes Player 1's probability. A Markov chain counts as Player 1's.
Player mdp_controller(const Game& game);

struct MdpSolution {
  ValueVector values;  // Exact
  Player controller = Player::One;
  /// Memoryless optimal choice per state, in the controller's alphabet.
  std::vector<ActionId> selector;
};

/// Exact optimal reachability probabilities by graph preprocessing and
/// policy iteration with exact linear solves. Throws NotMdp or
/// NotCompleteObservation.
MdpSolution mdp_reach_value(const Game& game, const StateSet& target);

/// States from which Player 1 wins almost surely. Only Reach and Buechi are
/// accepted (InvalidArgument otherwise).
StateSet mdp_almost_sure(const Game& game, const Objective& objective);

/// Maximal end components of an MDP, each as a sorted state list, ordered
/// by smallest member. `allowed` restricts the state set when non-empty.
std::vector<StateSet> maximal_end_components(const Game& game, const std::vector<bool>& allowed = {});

}  // namespace rfg
