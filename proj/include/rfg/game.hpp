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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rfg/rational.hpp"

namespace rfg {

using StateId = std::size_t;
using ActionId = std::size_t;
using BlockId = std::size_t;

enum class Player { One = 1, Two = 2 };

inline Player opponent(Player p) { return p == Player::One ? Player::Two : Player::One; }
inline int index_of(Player p) { return p == Player::One ? 0 : 1; }

/// Finite-support distribution over states, entries sorted by state id.
/// Weights are stored as given; `validate` is what enforces positivity and
/// summing to one, so a corrupted distribution can still be represented.
class Distribution {
 public:
  using Entry = std::pair<StateId, Rational>;

  Distribution() = default;
  static Distribution point(StateId s);

  /// Accumulates `weight` onto state `s`.
  void add(StateId s, const Rational& weight);

  std::span<const Entry> entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  Rational weight(StateId s) const;
  Rational total() const;
  bool is_point_mass() const { return entries_.size() == 1 && entries_[0].second == Rational(1); }

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Partition of the state set into observation blocks. A partition built
/// with `full` keeps the marker so it serializes back as `full`; its blocks
/// are the singletons labelled by state name.
class ObservationPartition {
 public:
  ObservationPartition() = default;

  static ObservationPartition full(std::span<const std::string> state_names);
  /// Blocks are reordered by label. Members are sorted.
  ObservationPartition(std::vector<std::string> labels, std::vector<std::vector<StateId>> blocks,
                       std::size_t num_states);

  bool is_full_marker() const { return full_; }
  /// True when every block is a singleton, with or without the marker.
  bool all_singletons() const;

  std::size_t num_blocks() const { return blocks_.size(); }
  std::span<const StateId> members(BlockId b) const { return blocks_[b]; }
  const std::string& label(BlockId b) const { return labels_[b]; }
  std::optional<BlockId> find_label(std::string_view label) const;

  /// Block containing `s`; nullopt when `s` is uncovered (an invalid
  /// partition). With overlapping blocks the first one wins.
  std::optional<BlockId> block_of(StateId s) const;

  friend bool operator==(const ObservationPartition&, const ObservationPartition&) = default;

 private:
  bool full_ = false;
  std::vector<std::string> labels_;
  std::vector<std::vector<StateId>> blocks_;
  std::vector<std::optional<BlockId>> block_of_;
};

class GameBuilder;

/// Concurrent stochastic game of partial observation. Identifiers are kept
/// in lexicographic order, so ids double as the canonical order.
class Game {
 public:
  Game() = default;

  const std::string& name() const { return name_; }
  std::size_t num_states() const { return states_.size(); }
  std::size_t num_actions(Player p) const { return actions_[index_of(p)].size(); }

  std::span<const std::string> states() const { return states_; }
  std::span<const std::string> actions(Player p) const { return actions_[index_of(p)]; }
  const std::string& state_name(StateId s) const { return states_[s]; }
  const std::string& action_name(Player p, ActionId a) const { return actions_[index_of(p)][a]; }

  std::optional<StateId> find_state(std::string_view name) const;
  std::optional<ActionId> find_action(Player p, std::string_view name) const;
  /// Throw `UnknownIdentifier` when the name is absent.
  StateId state(std::string_view name) const;
  ActionId action(Player p, std::string_view name) const;

  /// Empty when the triple was never defined (reported by `validate`).
  const Distribution& delta(StateId s, ActionId a1, ActionId a2) const {
    return delta_[(s * actions_[0].size() + a1) * actions_[1].size() + a2];
  }

  const ObservationPartition& observations(Player p) const { return obs_[index_of(p)]; }
  /// Observation block of `s` for player `p`. Throws on an uncovered state.
  BlockId observation(Player p, StateId s) const;

  std::optional<StateId> initial() const { return initial_; }
  /// Absorbing state that receives illegal gadget actions, when present.
  std::optional<StateId> sink() const { return sink_; }

  friend bool operator==(const Game&, const Game&) = default;

 private:
  friend class GameBuilder;

  std::string name_;
  std::vector<std::string> states_;
  std::vector<std::string> actions_[2];
  std::vector<Distribution> delta_;
  ObservationPartition obs_[2];
  std::optional<StateId> initial_;
  std::optional<StateId> sink_;
};

/// Name-based construction of a `Game`. The wildcard action "-" stands for
/// every action of that player, which is how turn-based and probabilistic
/// states are written down. Later definitions of the same triple win.
class GameBuilder {
 public:
  static constexpr std::string_view kAnyAction = "-";

  explicit GameBuilder(std::string name) : name_(std::move(name)) {}

  GameBuilder& state(std::string name);
  GameBuilder& actions(Player p, std::vector<std::string> names);
  GameBuilder& transition(std::string s, std::string a1, std::string a2,
                          std::vector<std::pair<std::string, Rational>> successors);
  GameBuilder& full_observation(Player p);
  GameBuilder& observation_block(Player p, std::string label, std::vector<std::string> members);
  GameBuilder& initial(std::string s);
  GameBuilder& sink(std::string s);

  bool has_state(std::string_view name) const;

  /// Resolves names and expands wildcards. Throws `UnknownIdentifier` for
  /// names that were never declared; leaves semantic checks to `validate`.
  Game build() const;

 private:
  struct RawTransition {
    std::string state, a1, a2;
    std::vector<std::pair<std::string, Rational>> successors;
  };
  struct RawBlock {
    std::string label;
    std::vector<std::string> members;
  };

  std::string name_;
  std::vector<std::string> states_;
  std::vector<std::string> actions_[2];
  std::vector<RawTransition> transitions_;
  bool full_[2] = {false, false};
  std::vector<RawBlock> blocks_[2];
  std::optional<std::string> initial_;
  std::optional<std::string> sink_;
};

// ---------------------------------------------------------------------------
// Classification

enum class TurnKind { Player1Turn, Player2Turn, Probabilistic, Concurrent };

struct StateKind {
  TurnKind turn = TurnKind::Concurrent;
  bool deterministic = false;

  friend bool operator==(const StateKind&, const StateKind&) = default;
};

const char* to_string(TurnKind kind);

/// Player-1 state iff delta(s,a,b) = delta(s,a,b') for all a, b, b'; the
/// symmetric condition makes a Player-2 state; both together make the state
/// probabilistic.
StateKind classify_state(const Game& game, StateId s);

enum class ObservationClass { Pa, Os1, Os2, Co };
enum class Interaction { Concurrent, TurnBased };
enum class PlayerCount { TwoAndHalf, OneAndHalf };

struct GameClass {
  ObservationClass observation = ObservationClass::Pa;
  Interaction interaction = Interaction::Concurrent;
  PlayerCount players = PlayerCount::TwoAndHalf;

  friend bool operator==(const GameClass&, const GameClass&) = default;
};

const char* to_string(ObservationClass c);
const char* to_string(Interaction c);
const char* to_string(PlayerCount c);
std::string to_string(const GameClass& c);

GameClass classify_game(const Game& game);

// ---------------------------------------------------------------------------
// Validation

struct ValidationReport {
  std::vector<std::string> violations;
  /// States split into action states (point masses into probabilistic
  /// states) and probabilistic states (action-independent, into action
  /// states).
  bool interaction_separated = false;
  /// Observations about conventions that are not errors.
  std::vector<std::string> notes;

  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const Game& game);

/// Membership in the probabilistic side of an interaction-separated game,
/// or nullopt if no such split exists. Each connected component is coloured
/// starting from its smallest state as an action state when that works.
std::optional<std::vector<bool>> interaction_split(const Game& game);

/// True if some action pair moves `s` to `t` with positive probability.
bool connected(const Game& game, StateId s, StateId t);

std::vector<BlockId> observation_sequence(const Game& game, std::span<const StateId> prefix, Player player);

}  // namespace rfg
