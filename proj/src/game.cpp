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

#include "rfg/game.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "rfg/error.hpp"

namespace rfg {

// ---------------------------------------------------------------------------
// Distribution

Distribution Distribution::point(StateId s) {
  Distribution d;
  d.entries_.emplace_back(s, Rational(1));
  return d;
}

void Distribution::add(StateId s, const Rational& weight) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), s,
                             [](const Entry& e, StateId id) { return e.first < id; });
  if (it != entries_.end() && it->first == s) {
    it->second += weight;
  } else {
    entries_.insert(it, Entry{s, weight});
  }
}

Rational Distribution::weight(StateId s) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), s,
                             [](const Entry& e, StateId id) { return e.first < id; });
  if (it != entries_.end() && it->first == s) return it->second;
  return Rational(0);
}

Rational Distribution::total() const {
  Rational sum;
  for (const auto& [s, w] : entries_) sum += w;
  return sum;
}

// ---------------------------------------------------------------------------
// ObservationPartition

ObservationPartition ObservationPartition::full(std::span<const std::string> state_names) {
  ObservationPartition p;
  p.full_ = true;
  for (StateId s = 0; s < state_names.size(); ++s) {
    p.labels_.push_back(state_names[s]);
    p.blocks_.push_back({s});
    p.block_of_.push_back(s);
  }
  return p;
}

ObservationPartition::ObservationPartition(std::vector<std::string> labels,
                                           std::vector<std::vector<StateId>> blocks,
                                           std::size_t num_states) {
  if (labels.size() != blocks.size()) {
    throw Error(ErrorCode::InvalidArgument, "observation labels and blocks differ in number");
  }
  std::vector<std::size_t> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
  for (std::size_t i : order) {
    labels_.push_back(std::move(labels[i]));
    auto members = std::move(blocks[i]);
    std::sort(members.begin(), members.end());
    blocks_.push_back(std::move(members));
  }
  block_of_.assign(num_states, std::nullopt);
  for (BlockId b = 0; b < blocks_.size(); ++b) {
    for (StateId s : blocks_[b]) {
      if (s < num_states && !block_of_[s]) block_of_[s] = b;
    }
  }
}

bool ObservationPartition::all_singletons() const {
  if (full_) return true;
  std::size_t covered = 0;
  for (const auto& b : blocks_) {
    if (b.size() != 1) return false;
    ++covered;
  }
  return covered == block_of_.size() &&
         std::all_of(block_of_.begin(), block_of_.end(), [](const auto& b) { return b.has_value(); });
}

std::optional<BlockId> ObservationPartition::find_label(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<BlockId>(it - labels_.begin());
}

std::optional<BlockId> ObservationPartition::block_of(StateId s) const {
  if (s >= block_of_.size()) return std::nullopt;
  return block_of_[s];
}

// ---------------------------------------------------------------------------
// Game

namespace {

std::optional<std::size_t> find_sorted(const std::vector<std::string>& names, std::string_view name) {
  auto it = std::lower_bound(names.begin(), names.end(), name,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == names.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

}  // namespace

std::optional<StateId> Game::find_state(std::string_view name) const { return find_sorted(states_, name); }

std::optional<ActionId> Game::find_action(Player p, std::string_view name) const {
  return find_sorted(actions_[index_of(p)], name);
}

StateId Game::state(std::string_view name) const {
  auto s = find_state(name);
  if (!s) throw Error(ErrorCode::UnknownIdentifier, "unknown state '" + std::string(name) + "'");
  return *s;
}

ActionId Game::action(Player p, std::string_view name) const {
  auto a = find_action(p, name);
  if (!a) {
    throw Error(ErrorCode::UnknownIdentifier, "unknown action '" + std::string(name) + "' for player " +
                                                  std::to_string(static_cast<int>(p)));
  }
  return *a;
}

BlockId Game::observation(Player p, StateId s) const {
  auto b = obs_[index_of(p)].block_of(s);
  if (!b) {
    throw Error(ErrorCode::InvalidArgument,
                "state '" + state_name(s) + "' has no observation for player " + std::to_string(static_cast<int>(p)));
  }
  return *b;
}

// ---------------------------------------------------------------------------
// GameBuilder

GameBuilder& GameBuilder::state(std::string name) {
  if (!has_state(name)) states_.push_back(std::move(name));
  return *this;
}

bool GameBuilder::has_state(std::string_view name) const {
  return std::find(states_.begin(), states_.end(), name) != states_.end();
}

GameBuilder& GameBuilder::actions(Player p, std::vector<std::string> names) {
  actions_[index_of(p)] = std::move(names);
  return *this;
}

GameBuilder& GameBuilder::transition(std::string s, std::string a1, std::string a2,
                                     std::vector<std::pair<std::string, Rational>> successors) {
  transitions_.push_back(RawTransition{std::move(s), std::move(a1), std::move(a2), std::move(successors)});
  return *this;
}

GameBuilder& GameBuilder::full_observation(Player p) {
  full_[index_of(p)] = true;
  blocks_[index_of(p)].clear();
  return *this;
}

GameBuilder& GameBuilder::observation_block(Player p, std::string label, std::vector<std::string> members) {
  full_[index_of(p)] = false;
  blocks_[index_of(p)].push_back(RawBlock{std::move(label), std::move(members)});
  return *this;
}

GameBuilder& GameBuilder::initial(std::string s) {
  initial_ = std::move(s);
  return *this;
}

GameBuilder& GameBuilder::sink(std::string s) {
  sink_ = std::move(s);
  return *this;
}

Game GameBuilder::build() const {
  Game g;
  g.name_ = name_;
  g.states_ = states_;
  std::sort(g.states_.begin(), g.states_.end());
  g.states_.erase(std::unique(g.states_.begin(), g.states_.end()), g.states_.end());
  for (int i = 0; i < 2; ++i) {
    g.actions_[i] = actions_[i];
    std::sort(g.actions_[i].begin(), g.actions_[i].end());
    g.actions_[i].erase(std::unique(g.actions_[i].begin(), g.actions_[i].end()), g.actions_[i].end());
  }
  const std::size_t n1 = g.actions_[0].size();
  const std::size_t n2 = g.actions_[1].size();
  g.delta_.assign(g.states_.size() * n1 * n2, Distribution{});

  for (const auto& t : transitions_) {
    StateId s = g.state(t.state);
    std::vector<ActionId> a1s;
    std::vector<ActionId> a2s;
    if (t.a1 == kAnyAction) {
      a1s.resize(n1);
      std::iota(a1s.begin(), a1s.end(), 0);
    } else {
      a1s.push_back(g.action(Player::One, t.a1));
    }
    if (t.a2 == kAnyAction) {
      a2s.resize(n2);
      std::iota(a2s.begin(), a2s.end(), 0);
    } else {
      a2s.push_back(g.action(Player::Two, t.a2));
    }
    Distribution d;
    for (const auto& [target, w] : t.successors) d.add(g.state(target), w);
    for (ActionId a : a1s) {
      for (ActionId b : a2s) g.delta_[(s * n1 + a) * n2 + b] = d;
    }
  }

  for (int i = 0; i < 2; ++i) {
    if (full_[i]) {
      g.obs_[i] = ObservationPartition::full(g.states_);
      continue;
    }
    std::vector<std::string> labels;
    std::vector<std::vector<StateId>> blocks;
    for (const auto& b : blocks_[i]) {
      labels.push_back(b.label);
      std::vector<StateId> members;
      for (const auto& m : b.members) members.push_back(g.state(m));
      blocks.push_back(std::move(members));
    }
    g.obs_[i] = ObservationPartition(std::move(labels), std::move(blocks), g.states_.size());
  }
  if (initial_) g.initial_ = g.state(*initial_);
  if (sink_) g.sink_ = g.state(*sink_);
  return g;
}

// ---------------------------------------------------------------------------
// Classification

const char* to_string(TurnKind kind) {
  switch (kind) {
    case TurnKind::Player1Turn: return "player1";
    case TurnKind::Player2Turn: return "player2";
    case TurnKind::Probabilistic: return "probabilistic";
    case TurnKind::Concurrent: return "concurrent";
  }
  return "?";
}

StateKind classify_state(const Game& game, StateId s) {
  if (s >= game.num_states()) {
    throw Error(ErrorCode::UnknownIdentifier, "unknown state id " + std::to_string(s));
  }
  const std::size_t n1 = game.num_actions(Player::One);
  const std::size_t n2 = game.num_actions(Player::Two);
  bool p1_turn = true;  // Player 2's action never matters
  bool p2_turn = true;  // Player 1's action never matters
  bool deterministic = true;
  for (ActionId a = 0; a < n1; ++a) {
    for (ActionId b = 0; b < n2; ++b) {
      const Distribution& d = game.delta(s, a, b);
      if (!d.is_point_mass()) deterministic = false;
      if (d != game.delta(s, a, 0)) p1_turn = false;
      if (d != game.delta(s, 0, b)) p2_turn = false;
    }
  }
  StateKind kind;
  kind.deterministic = deterministic;
  if (p1_turn && p2_turn) {
    kind.turn = TurnKind::Probabilistic;
  } else if (p1_turn) {
    kind.turn = TurnKind::Player1Turn;
  } else if (p2_turn) {
    kind.turn = TurnKind::Player2Turn;
  } else {
    kind.turn = TurnKind::Concurrent;
  }
  return kind;
}

const char* to_string(ObservationClass c) {
  switch (c) {
    case ObservationClass::Pa: return "Pa";
    case ObservationClass::Os1: return "Os1";
    case ObservationClass::Os2: return "Os2";
    case ObservationClass::Co: return "Co";
  }
  return "?";
}

const char* to_string(Interaction c) { return c == Interaction::TurnBased ? "turn-based" : "concurrent"; }

const char* to_string(PlayerCount c) { return c == PlayerCount::OneAndHalf ? "1.5-player" : "2.5-player"; }

std::string to_string(const GameClass& c) {
  return std::string(to_string(c.observation)) + " " + to_string(c.interaction) + " " + to_string(c.players);
}

GameClass classify_game(const Game& game) {
  GameClass c;
  const bool full1 = game.observations(Player::One).all_singletons();
  const bool full2 = game.observations(Player::Two).all_singletons();
  if (full1 && full2) {
    c.observation = ObservationClass::Co;
  } else if (full1) {
    c.observation = ObservationClass::Os1;
  } else if (full2) {
    c.observation = ObservationClass::Os2;
  } else {
    c.observation = ObservationClass::Pa;
  }
  c.interaction = Interaction::TurnBased;
  for (StateId s = 0; s < game.num_states(); ++s) {
    if (classify_state(game, s).turn == TurnKind::Concurrent) {
      c.interaction = Interaction::Concurrent;
      break;
    }
  }
  c.players = (game.num_actions(Player::One) == 1 || game.num_actions(Player::Two) == 1) ? PlayerCount::OneAndHalf
                                                                                         : PlayerCount::TwoAndHalf;
  return c;
}

// ---------------------------------------------------------------------------
// Validation

bool connected(const Game& game, StateId s, StateId t) {
  for (ActionId a = 0; a < game.num_actions(Player::One); ++a) {
    for (ActionId b = 0; b < game.num_actions(Player::Two); ++b) {
      if (game.delta(s, a, b).weight(t).sign() > 0) return true;
    }
  }
  return false;
}

namespace {

std::string triple(const Game& g, StateId s, ActionId a, ActionId b) {
  return "(" + g.state_name(s) + "," + g.action_name(Player::One, a) + "," + g.action_name(Player::Two, b) + ")";
}

bool action_independent(const Game& g, StateId s) {
  for (ActionId a = 0; a < g.num_actions(Player::One); ++a) {
    for (ActionId b = 0; b < g.num_actions(Player::Two); ++b) {
      if (g.delta(s, a, b) != g.delta(s, 0, 0)) return false;
    }
  }
  return true;
}

bool all_point_masses(const Game& g, StateId s) {
  for (ActionId a = 0; a < g.num_actions(Player::One); ++a) {
    for (ActionId b = 0; b < g.num_actions(Player::Two); ++b) {
      if (!g.delta(s, a, b).is_point_mass()) return false;
    }
  }
  return true;
}

void check_partition(const Game& g, Player p, std::vector<std::string>& out) {
  const auto& part = g.observations(p);
  const std::string who = "obs" + std::to_string(static_cast<int>(p));
  std::vector<int> seen(g.num_states(), 0);
  std::set<std::string> labels;
  for (BlockId b = 0; b < part.num_blocks(); ++b) {
    if (!labels.insert(part.label(b)).second) {
      out.push_back(who + ": duplicate block label '" + part.label(b) + "'");
    }
    if (part.members(b).empty()) out.push_back(who + ": block '" + part.label(b) + "' is empty");
    for (StateId s : part.members(b)) {
      if (s >= g.num_states()) continue;
      if (++seen[s] == 2) out.push_back(who + ": blocks overlap at " + g.state_name(s));
    }
  }
  for (StateId s = 0; s < g.num_states(); ++s) {
    if (seen[s] == 0) out.push_back(who + ": state " + g.state_name(s) + " is in no block");
  }
}

}  // namespace

std::optional<std::vector<bool>> interaction_split(const Game& game) {
  const std::size_t n = game.num_states();
  std::vector<std::vector<StateId>> adj(n);
  for (StateId s = 0; s < n; ++s) {
    for (ActionId a = 0; a < game.num_actions(Player::One); ++a) {
      for (ActionId b = 0; b < game.num_actions(Player::Two); ++b) {
        for (const auto& [t, w] : game.delta(s, a, b).entries()) {
          if (w.sign() <= 0) continue;
          adj[s].push_back(t);
          adj[t].push_back(s);
        }
      }
    }
  }
  std::vector<bool> deterministic(n), independent(n);
  for (StateId s = 0; s < n; ++s) {
    deterministic[s] = all_point_masses(game, s);
    independent[s] = action_independent(game, s);
  }

  std::vector<int> component(n, -1);
  std::vector<bool> probabilistic(n, false);
  // Colour each component by BFS; `first_side` is the side of its smallest
  // state (states are visited in id order, so the root is the smallest).
  auto colour = [&](StateId root, bool root_probabilistic, std::vector<int>& side) -> bool {
    std::deque<StateId> queue{root};
    side[root] = root_probabilistic ? 1 : 0;
    while (!queue.empty()) {
      StateId s = queue.front();
      queue.pop_front();
      if (side[s] == 0 && !deterministic[s]) return false;
      if (side[s] == 1 && !independent[s]) return false;
      for (StateId t : adj[s]) {
        if (side[t] == -1) {
          side[t] = 1 - side[s];
          queue.push_back(t);
        } else if (side[t] == side[s]) {
          return false;
        }
      }
    }
    return true;
  };

  std::vector<int> side(n, -1);
  for (StateId root = 0; root < n; ++root) {
    if (side[root] != -1) continue;
    std::vector<int> attempt = side;
    if (!colour(root, false, attempt)) {
      attempt = side;
      if (!colour(root, true, attempt)) return std::nullopt;
    }
    side = std::move(attempt);
  }
  for (StateId s = 0; s < n; ++s) probabilistic[s] = side[s] == 1;
  return probabilistic;
}

ValidationReport validate(const Game& game) {
  ValidationReport report;
  auto& out = report.violations;
  if (game.num_states() == 0) out.push_back("game has no states");
  if (game.num_actions(Player::One) == 0) out.push_back("actions1 is empty");
  if (game.num_actions(Player::Two) == 0) out.push_back("actions2 is empty");

  for (StateId s = 0; s < game.num_states(); ++s) {
    for (ActionId a = 0; a < game.num_actions(Player::One); ++a) {
      for (ActionId b = 0; b < game.num_actions(Player::Two); ++b) {
        const Distribution& d = game.delta(s, a, b);
        if (d.empty()) {
          out.push_back("missing transition at " + triple(game, s, a, b));
          continue;
        }
        for (const auto& [t, w] : d.entries()) {
          if (w.sign() <= 0) {
            out.push_back("non-positive weight " + w.str() + " on " + game.state_name(t) + " at " +
                          triple(game, s, a, b));
          }
        }
        Rational sum = d.total();
        if (sum != Rational(1)) out.push_back("sum " + sum.str() + " != 1 at " + triple(game, s, a, b));
      }
    }
  }
  check_partition(game, Player::One, out);
  check_partition(game, Player::Two, out);

  if (report.ok()) report.interaction_separated = interaction_split(game).has_value();

  for (Player p : {Player::One, Player::Two}) {
    for (const auto& a : game.actions(p)) {
      if (a.rfind("#g", 0) == 0) {
        report.notes.push_back("gadget actions present for player " + std::to_string(static_cast<int>(p)) +
                               "; at non-gadget states they alias the smallest original action");
        break;
      }
    }
  }
  if (game.sink()) {
    report.notes.push_back("sink '" + game.state_name(*game.sink()) +
                           "' absorbs illegal gadget actions; strategies using them are rejected by evaluation");
  }
  return report;
}

std::vector<BlockId> observation_sequence(const Game& game, std::span<const StateId> prefix, Player player) {
  std::vector<BlockId> seq;
  seq.reserve(prefix.size());
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i] >= game.num_states()) {
      throw Error(ErrorCode::UnknownIdentifier, "unknown state id at index " + std::to_string(i));
    }
    if (i > 0 && !connected(game, prefix[i - 1], prefix[i])) {
      throw Error(ErrorCode::Disconnected, "no transition from " + game.state_name(prefix[i - 1]) + " to " +
                                               game.state_name(prefix[i]) + " at index " + std::to_string(i));
    }
    seq.push_back(game.observation(player, prefix[i]));
  }
  return seq;
}

}  // namespace rfg
