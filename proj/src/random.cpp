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

#include "rfg/random.hpp"

#include <algorithm>
#include <numeric>

namespace rfg {

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

std::vector<long> random_composition(std::mt19937_64& rng, long total, std::size_t parts) {
  std::vector<long> cuts(static_cast<std::size_t>(total - 1));
  std::iota(cuts.begin(), cuts.end(), 1);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(parts - 1);
  std::sort(cuts.begin(), cuts.end());
  std::vector<long> out;
  long previous = 0;
  for (long c : cuts) {
    out.push_back(c - previous);
    previous = c;
  }
  out.push_back(total - previous);
  return out;
}

namespace {

std::vector<std::pair<std::string, Rational>> random_distribution(std::mt19937_64& rng,
                                                                  const std::vector<std::string>& states,
                                                                  const RandomGameOptions& o) {
  const long d = o.denominators[uniform(rng, 0, o.denominators.size() - 1)];
  const std::size_t cap = std::min({o.max_support, states.size(), static_cast<std::size_t>(d)});
  const std::size_t k = uniform(rng, 1, cap);
  std::vector<std::string> targets = states;
  std::shuffle(targets.begin(), targets.end(), rng);
  targets.resize(k);
  std::vector<long> parts = random_composition(rng, d, k);
  std::vector<std::pair<std::string, Rational>> out;
  for (std::size_t i = 0; i < k; ++i) out.emplace_back(targets[i], Rational(parts[i], d));
  return out;
}

void random_observation(std::mt19937_64& rng, GameBuilder& b, Player p, const std::vector<std::string>& states,
                        const RandomGameOptions& o) {
  if (!coin(rng, o.partial_observation)) {
    b.full_observation(p);
    return;
  }
  const std::size_t m = uniform(rng, 1, std::min(o.max_observations, states.size()));
  std::vector<std::vector<std::string>> blocks(m);
  for (const auto& s : states) blocks[uniform(rng, 0, m - 1)].push_back(s);
  for (auto& block : blocks) {
    if (block.empty()) continue;
    std::string label = "o" + *std::min_element(block.begin(), block.end());
    b.observation_block(p, label, block);
  }
}

}  // namespace

Game random_game(std::mt19937_64& rng, const RandomGameOptions& o) {
  const std::size_t n = uniform(rng, o.min_states, o.max_states);
  const std::size_t n1 = uniform(rng, 1, o.max_actions1);
  const std::size_t n2 = uniform(rng, 1, o.max_actions2);
  std::vector<std::string> states, a1, a2;
  for (std::size_t i = 0; i < n; ++i) states.push_back("s" + std::to_string(i));
  for (std::size_t i = 0; i < n1; ++i) a1.push_back("a" + std::to_string(i));
  for (std::size_t i = 0; i < n2; ++i) a2.push_back("b" + std::to_string(i));
  GameBuilder b("random");
  b.actions(Player::One, a1);
  b.actions(Player::Two, a2);
  for (const auto& s : states) b.state(s);
  b.initial(states[0]);
  const std::string any(GameBuilder::kAnyAction);
  for (const auto& s : states) {
    // 0: Player 1, 1: Player 2, 2: probabilistic, 3: concurrent
    const std::size_t kind = uniform(rng, 0, o.allow_concurrent ? 3 : 2);
    if (kind == 0) {
      for (const auto& a : a1) b.transition(s, a, any, random_distribution(rng, states, o));
    } else if (kind == 1) {
      for (const auto& c : a2) b.transition(s, any, c, random_distribution(rng, states, o));
    } else if (kind == 2) {
      b.transition(s, any, any, random_distribution(rng, states, o));
    } else {
      for (const auto& a : a1) {
        for (const auto& c : a2) b.transition(s, a, c, random_distribution(rng, states, o));
      }
    }
  }
  random_observation(rng, b, Player::One, states, o);
  random_observation(rng, b, Player::Two, states, o);
  return b.build();
}

Strategy random_strategy(std::mt19937_64& rng, const Game& game, StateId init, Player owner, std::size_t horizon,
                         const RandomStrategyOptions& o) {
  Strategy out(owner, horizon);
  const std::size_t actions = game.num_actions(owner);
  for (const auto& h : reachable_histories(game, init, owner, horizon)) {
    if (o.pure || actions == 1) {
      out.set_pure(h, uniform(rng, 0, actions - 1));
      continue;
    }
    const long d = o.denominators[uniform(rng, 0, o.denominators.size() - 1)];
    const std::size_t k = uniform(rng, 1, std::min(actions, static_cast<std::size_t>(d)));
    std::vector<ActionId> ids(actions);
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    std::vector<long> parts = random_composition(rng, d, k);
    ActionDistribution choice;
    for (std::size_t i = 0; i < k; ++i) choice.emplace_back(ids[i], Rational(parts[i], d));
    out.set(h, std::move(choice));
  }
  return out;
}

}  // namespace rfg
