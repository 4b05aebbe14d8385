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
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "rfg/game.hpp"

namespace rfg {

/// Sequence of the owner's observation blocks, starting with the block of
/// the initial state and ending with the block of the current state.
using ObsHistory = std::vector<BlockId>;

/// Sorted by action id, positive weights.
using ActionDistribution = std::vector<std::pair<ActionId, Rational>>;

ActionDistribution pure_choice(ActionId a);
/// Drops zero weights, merges duplicates, sorts. Throws InvalidArgument on
/// negative weights or a total other than 1.
ActionDistribution normalize_choice(ActionDistribution d);

/// Anything that picks actions from observation histories. Strategies
/// translated through a reduction implement this lazily.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual Player owner() const = 0;
  /// Longest history the policy is defined on.
  virtual std::size_t horizon() const = 0;
  virtual std::optional<ActionDistribution> choose(std::span<const BlockId> history) const = 0;
  /// Histories of equal length with equal keys must get equal choices, now
  /// and after any common extension. Evaluation merges them.
  virtual ObsHistory history_key(std::span<const BlockId> history) const {
    return {history.begin(), history.end()};
  }
};

enum class StrategyKind { Pure, Randomized };

/// Finite-horizon observation-based strategy stored as a table. Being keyed
/// on observation histories makes it observation-based by construction.
class Strategy : public Policy {
 public:
  Strategy(Player owner, std::size_t horizon) : owner_(owner), horizon_(horizon) {}

  Player owner() const override { return owner_; }
  std::size_t horizon() const override { return horizon_; }
  std::optional<ActionDistribution> choose(std::span<const BlockId> history) const override;

  /// Throws OutOfRange for an empty history or one longer than the horizon.
  void set(ObsHistory history, ActionDistribution choice);
  void set_pure(ObsHistory history, ActionId a) { set(std::move(history), pure_choice(a)); }

  StrategyKind kind() const;
  bool is_pure() const { return kind() == StrategyKind::Pure; }
  const std::map<ObsHistory, ActionDistribution>& table() const { return table_; }

  friend bool operator==(const Strategy& a, const Strategy& b) {
    return a.owner_ == b.owner_ && a.horizon_ == b.horizon_ && a.table_ == b.table_;
  }

 private:
  Player owner_;
  std::size_t horizon_;
  std::map<ObsHistory, ActionDistribution> table_;
};

/// Observation histories of `player` with lengths 1..max_len that occur with
/// positive probability from `init` under some action sequence.
std::set<ObsHistory> reachable_histories(const Game& game, StateId init, Player player, std::size_t max_len);

/// Strategy playing `choice` at every reachable history up to `horizon`.
Strategy constant_strategy(const Game& game, StateId init, Player owner, std::size_t horizon,
                           const ActionDistribution& choice);

}  // namespace rfg
