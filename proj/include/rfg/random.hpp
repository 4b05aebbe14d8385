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
#include <cstdint>
#include <random>
#include <vector>

#include "rfg/game.hpp"
#include "rfg/strategy.hpp"

namespace rfg {

/// Generator seeded from a run seed and a trial index, so trials are
/// independent of each other and of evaluation order.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

struct RandomGameOptions {
  std::size_t min_states = 2;
  std::size_t max_states = 5;
  std::size_t max_actions1 = 3;
  std::size_t max_actions2 = 3;
  /// Each distribution uses one of these denominators.
  std::vector<long> denominators = {4};
  std::size_t max_support = 3;
  bool allow_concurrent = true;
  /// Probability that a player gets a random coarser partition instead of
  /// complete observation.
  double partial_observation = 0.0;
  std::size_t max_observations = 3;
};

/// States s0.., actions a0.. and b0.., initial state s0. Every state is
/// drawn as a Player-1, Player-2, probabilistic or concurrent state.
Game random_game(std::mt19937_64& rng, const RandomGameOptions& options);

struct RandomStrategyOptions {
  bool pure = false;
  /// Weights are multiples of 1/d for d drawn from this list.
  std::vector<long> denominators = {2, 3, 4};
};

/// Random strategy defined on every history of `owner` reachable from
/// `init` within `horizon`.
Strategy random_strategy(std::mt19937_64& rng, const Game& game, StateId init, Player owner, std::size_t horizon,
                         const RandomStrategyOptions& options = {});

/// Random composition of `total` into `parts` positive integers.
std::vector<long> random_composition(std::mt19937_64& rng, long total, std::size_t parts);

}  // namespace rfg
