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

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "rfg/game.hpp"
#include "rfg/io.hpp"
#include "rfg/objective.hpp"
#include "rfg/strategy.hpp"

namespace rfg::testing {

inline std::string fixture_path(const std::string& name) { return std::string(RFG_TEST_DATA) + "/fixtures/" + name; }
inline std::string input_path(const std::string& name) { return std::string(RFG_TEST_DATA) + "/inputs/" + name; }

inline GameDocument load_fixture(const std::string& name) { return parse_game_document(read_file(fixture_path(name))); }

inline std::vector<std::string> corpus() {
  return {"coins.game", "guessing.game", "hide.game", "mdp.game", "pennies.game", "pomdp.game", "thirds.game"};
}

/// Reachability within `horizon` steps by explicit recursion over plays.
/// Shares nothing with the library evaluator except `Policy::choose`.
inline Rational oracle_reach(const Game& g, StateId init, const Policy* p1, const Policy* p2, const StateSet& target,
                             std::size_t horizon) {
  std::vector<bool> in(g.num_states(), false);
  for (StateId t : target) in[t] = true;
  std::function<Rational(StateId, ObsHistory&, ObsHistory&, std::size_t)> rec =
      [&](StateId s, ObsHistory& h1, ObsHistory& h2, std::size_t step) -> Rational {
    if (in[s]) return Rational(1);
    if (step == horizon) return Rational(0);
    ActionDistribution d1 = p1 ? *p1->choose(h1) : ActionDistribution{{0, Rational(1)}};
    ActionDistribution d2 = p2 ? *p2->choose(h2) : ActionDistribution{{0, Rational(1)}};
    Rational total;
    for (const auto& [a, wa] : d1) {
      for (const auto& [b, wb] : d2) {
        for (const auto& [t, wt] : g.delta(s, a, b).entries()) {
          h1.push_back(g.observation(Player::One, t));
          h2.push_back(g.observation(Player::Two, t));
          total += wa * wb * wt * rec(t, h1, h2, step + 1);
          h1.pop_back();
          h2.pop_back();
        }
      }
    }
    return total;
  };
  ObsHistory h1{g.observation(Player::One, init)};
  ObsHistory h2{g.observation(Player::Two, init)};
  return rec(init, h1, h2, 0);
}

/// Every pure strategy of `owner` over the reachable histories, by odometer.
inline std::vector<Strategy> all_pure_strategies(const Game& g, StateId init, Player owner, std::size_t horizon) {
  const auto histories = reachable_histories(g, init, owner, horizon);
  std::vector<ObsHistory> hs(histories.begin(), histories.end());
  std::vector<std::size_t> pick(hs.size(), 0);
  const std::size_t k = g.num_actions(owner);
  std::vector<Strategy> out;
  for (;;) {
    Strategy s(owner, horizon);
    for (std::size_t i = 0; i < hs.size(); ++i) s.set_pure(hs[i], pick[i]);
    out.push_back(std::move(s));
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == k) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return out;
}

/// Double-precision value iteration for one-player reachability, used to
/// cross-check the exact MDP solver. `maximize` picks the controller's aim.
inline std::vector<double> oracle_mdp_values(const Game& g, Player controller, const StateSet& target, bool maximize,
                                             std::size_t rounds = 20000) {
  std::vector<double> v(g.num_states(), 0.0);
  for (StateId t : target) v[t] = 1.0;
  for (std::size_t r = 0; r < rounds; ++r) {
    std::vector<double> next = v;
    for (StateId s = 0; s < g.num_states(); ++s) {
      if (v[s] == 1.0 && std::find(target.begin(), target.end(), s) != target.end()) continue;
      double best = maximize ? 0.0 : 1.0;
      for (ActionId a = 0; a < g.num_actions(controller); ++a) {
        const Distribution& d = controller == Player::One ? g.delta(s, a, 0) : g.delta(s, 0, a);
        double x = 0.0;
        for (const auto& [t, w] : d.entries()) x += w.to_double() * v[t];
        best = maximize ? std::max(best, x) : std::min(best, x);
      }
      next[s] = best;
    }
    v = std::move(next);
  }
  return v;
}

}  // namespace rfg::testing
