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

#include "rfg/evaluate.hpp"

#include <map>
#include <tuple>

#include "rfg/error.hpp"

namespace rfg {

std::vector<ActionId> illegal_actions(const Game& game, StateId s, Player player) {
  std::vector<ActionId> out;
  auto sink = game.sink();
  if (!sink || *sink == s) return out;
  const Player other = opponent(player);
  for (ActionId a = 0; a < game.num_actions(player); ++a) {
    bool always = true;
    for (ActionId o = 0; o < game.num_actions(other) && always; ++o) {
      const Distribution& d = player == Player::One ? game.delta(s, a, o) : game.delta(s, o, a);
      if (d.weight(*sink).sign() <= 0) always = false;
    }
    if (always) out.push_back(a);
  }
  return out;
}

namespace {

struct Chooser {
  const Game& game;
  const Policy* policy;
  Player player;
  std::vector<std::optional<std::vector<ActionId>>> illegal;  // cache per state

  Chooser(const Game& g, const Policy* p, Player who, std::size_t horizon)
      : game(g), policy(p), player(who), illegal(g.num_states()) {
    if (policy == nullptr) {
      if (game.num_actions(player) != 1) {
        throw Error(ErrorCode::InvalidArgument, "player " + std::to_string(static_cast<int>(player)) +
                                                    " has several actions but no strategy");
      }
      return;
    }
    if (policy->owner() != player) {
      throw Error(ErrorCode::InvalidArgument,
                  "strategy owner is not player " + std::to_string(static_cast<int>(player)));
    }
    if (policy->horizon() < horizon) {
      throw Error(ErrorCode::HorizonMismatch, "strategy horizon " + std::to_string(policy->horizon()) +
                                                  " is shorter than objective horizon " + std::to_string(horizon));
    }
  }

  ActionDistribution choose(StateId s, const ObsHistory& history) {
    if (policy == nullptr) return pure_choice(0);
    auto choice = policy->choose(history);
    if (!choice) {
      throw Error(ErrorCode::UndefinedHistory, "player " + std::to_string(static_cast<int>(player)) +
                                                   " strategy undefined on a history of length " +
                                                   std::to_string(history.size()));
    }
    if (!illegal[s]) illegal[s] = illegal_actions(game, s, player);
    for (const auto& [a, w] : *choice) {
      if (a >= game.num_actions(player)) {
        throw Error(ErrorCode::OutOfRange, "action id " + std::to_string(a) + " out of range");
      }
      for (ActionId bad : *illegal[s]) {
        if (bad == a) {
          throw Error(ErrorCode::Inadmissible, "player " + std::to_string(static_cast<int>(player)) + " plays " +
                                                   game.action_name(player, a) + " at " + game.state_name(s));
        }
      }
    }
    return *choice;
  }
};

}  // namespace

Rational evaluate_fixed(const Game& game, StateId init, const Policy* p1, const Policy* p2,
                        const BoundedReach& objective) {
  if (init >= game.num_states()) throw Error(ErrorCode::UnknownIdentifier, "unknown initial state");
  const std::size_t h = objective.horizon;
  Chooser c1(game, p1, Player::One, h);
  Chooser c2(game, p2, Player::Two, h);
  const std::vector<bool> target = indicator(objective.target, game.num_states());

  // Histories with equal keys under both policies are merged; one
  // representative pair is kept for the policies to look at.
  using Key = std::tuple<StateId, ObsHistory, ObsHistory>;
  struct Entry {
    Rational mass;
    ObsHistory h1, h2;
  };
  auto key_of = [](const Policy* p, const ObsHistory& h) { return p ? p->history_key(h) : ObsHistory{}; };
  std::map<Key, Entry> mass;
  {
    ObsHistory h1{game.observation(Player::One, init)};
    ObsHistory h2{game.observation(Player::Two, init)};
    mass.emplace(Key{init, key_of(p1, h1), key_of(p2, h2)}, Entry{Rational(1), h1, h2});
  }
  Rational reached;
  for (std::size_t step = 0;; ++step) {
    for (auto it = mass.begin(); it != mass.end();) {
      if (target[std::get<0>(it->first)]) {
        reached += it->second.mass;
        it = mass.erase(it);
      } else {
        ++it;
      }
    }
    if (step == h || mass.empty()) break;
    std::map<Key, Entry> next;
    for (const auto& [key, e] : mass) {
      const StateId s = std::get<0>(key);
      const ActionDistribution d1 = c1.choose(s, e.h1);
      const ActionDistribution d2 = c2.choose(s, e.h2);
      for (const auto& [a, wa] : d1) {
        for (const auto& [b, wb] : d2) {
          const Rational wab = e.mass * wa * wb;
          for (const auto& [t, wt] : game.delta(s, a, b).entries()) {
            ObsHistory n1 = e.h1;
            n1.push_back(game.observation(Player::One, t));
            ObsHistory n2 = e.h2;
            n2.push_back(game.observation(Player::Two, t));
            Key k{t, key_of(p1, n1), key_of(p2, n2)};
            auto it = next.find(k);
            if (it == next.end()) {
              next.emplace(std::move(k), Entry{wab * wt, std::move(n1), std::move(n2)});
            } else {
              it->second.mass += wab * wt;
            }
          }
        }
      }
    }
    mass = std::move(next);
  }
  return reached;
}

}  // namespace rfg
