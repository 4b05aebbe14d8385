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

#include "rfg/strategy.hpp"

#include <algorithm>

#include "rfg/error.hpp"

namespace rfg {

ActionDistribution pure_choice(ActionId a) { return {{a, Rational(1)}}; }

ActionDistribution normalize_choice(ActionDistribution d) {
  std::sort(d.begin(), d.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  ActionDistribution out;
  Rational total;
  for (auto& [a, w] : d) {
    if (w.sign() < 0) throw Error(ErrorCode::InvalidArgument, "negative action weight " + w.str());
    total += w;
    if (w.is_zero()) continue;
    if (!out.empty() && out.back().first == a) {
      out.back().second += w;
    } else {
      out.emplace_back(a, std::move(w));
    }
  }
  if (total != Rational(1)) {
    throw Error(ErrorCode::InvalidArgument, "action weights sum to " + total.str() + ", not 1");
  }
  return out;
}

std::optional<ActionDistribution> Strategy::choose(std::span<const BlockId> history) const {
  auto it = table_.find(ObsHistory(history.begin(), history.end()));
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void Strategy::set(ObsHistory history, ActionDistribution choice) {
  if (history.empty() || history.size() > horizon_) {
    throw Error(ErrorCode::OutOfRange, "history length " + std::to_string(history.size()) +
                                           " outside 1.." + std::to_string(horizon_));
  }
  table_[std::move(history)] = normalize_choice(std::move(choice));
}

StrategyKind Strategy::kind() const {
  for (const auto& [h, d] : table_) {
    if (d.size() != 1) return StrategyKind::Randomized;
  }
  return StrategyKind::Pure;
}

std::set<ObsHistory> reachable_histories(const Game& game, StateId init, Player player, std::size_t max_len) {
  std::set<ObsHistory> out;
  if (max_len == 0) return out;
  std::set<std::pair<StateId, ObsHistory>> frontier{{init, ObsHistory{game.observation(player, init)}}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::set<std::pair<StateId, ObsHistory>> next;
    for (const auto& [s, h] : frontier) {
      out.insert(h);
      if (len == max_len) continue;
      for (ActionId a = 0; a < game.num_actions(Player::One); ++a) {
        for (ActionId b = 0; b < game.num_actions(Player::Two); ++b) {
          for (const auto& [t, w] : game.delta(s, a, b).entries()) {
            if (w.sign() <= 0) continue;
            ObsHistory h2 = h;
            h2.push_back(game.observation(player, t));
            next.emplace(t, std::move(h2));
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

Strategy constant_strategy(const Game& game, StateId init, Player owner, std::size_t horizon,
                           const ActionDistribution& choice) {
  Strategy s(owner, horizon);
  for (const auto& h : reachable_histories(game, init, owner, horizon)) s.set(h, choice);
  return s;
}

}  // namespace rfg
