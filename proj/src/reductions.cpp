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

#include "rfg/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rfg/error.hpp"

namespace rfg {

const char* to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::Separate: return "separate";
    case ReductionKind::Uniformize: return "uniformize";
    case ReductionKind::CocGadget: return "coc";
    case ReductionKind::OstGadget: return "ost";
    case ReductionKind::NaiveBinary: return "naive-binary";
  }
  return "?";
}

std::optional<ReductionKind> parse_reduction_kind(std::string_view text) {
  for (auto k : {ReductionKind::Separate, ReductionKind::Uniformize, ReductionKind::CocGadget,
                 ReductionKind::OstGadget, ReductionKind::NaiveBinary}) {
    if (text == to_string(k)) return k;
  }
  return std::nullopt;
}

std::vector<std::string> gadget_action_names(std::size_t n) {
  std::size_t width = std::to_string(n == 0 ? 0 : n - 1).size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    std::string digits = std::to_string(i);
    names.push_back("#g" + std::string(width - digits.size(), '0') + digits);
  }
  return names;
}

// ---------------------------------------------------------------------------
// gcd

Rational gcd_of_probabilities(const std::vector<Rational>& values) {
  if (values.empty()) throw Error(ErrorCode::InvalidArgument, "gcd of an empty set of probabilities");
  mpz_class lcm = 1;
  for (const auto& v : values) {
    if (v.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "non-positive probability " + v.str());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.denominator().get_mpz_t());
  }
  mpz_class g = 0;
  for (const auto& v : values) {
    mpz_class scaled = v.numerator() * (lcm / v.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
  }
  return Rational(mpq_class(g, lcm));
}

std::vector<Rational> all_probabilities(const Game& game) {
  std::set<Rational> seen;
  for (StateId s = 0; s < game.num_states(); ++s) {
    for (ActionId a = 0; a < game.num_actions(Player::One); ++a) {
      for (ActionId b = 0; b < game.num_actions(Player::Two); ++b) {
        for (const auto& [t, w] : game.delta(s, a, b).entries()) {
          if (w.sign() > 0) seen.insert(w);
        }
      }
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

std::string fresh_name(std::string name, const std::set<std::string>& taken) {
  while (taken.count(name) != 0) name += "'";
  return name;
}

std::set<std::string> name_set(const Game& game) { return {game.states().begin(), game.states().end()}; }

std::vector<std::string> to_vector(std::span<const std::string> names) { return {names.begin(), names.end()}; }

std::vector<std::pair<std::string, Rational>> named(const Game& game, const Distribution& d) {
  std::vector<std::pair<std::string, Rational>> out;
  for (const auto& [t, w] : d.entries()) out.emplace_back(game.state_name(t), w);
  return out;
}

std::vector<std::pair<std::string, Rational>> point_to(const std::string& s) { return {{s, Rational(1)}}; }

std::vector<bool> require_separated(const Game& game) {
  auto split = interaction_split(game);
  if (!split) throw Error(ErrorCode::NotSeparated, "game '" + game.name() + "' is not interaction-separated");
  return *split;
}

/// Observation blocks of the original game extended with auxiliary states
/// (keyed by source). With `keep_full`, a complete-observation partition
/// stays complete.
void extend_observations(GameBuilder& builder, const Game& game, Player p, bool keep_full,
                         const std::map<StateId, std::vector<std::string>>& extra,
                         const std::optional<std::string>& sink) {
  const auto& part = game.observations(p);
  if (keep_full && part.is_full_marker()) {
    builder.full_observation(p);
    return;
  }
  std::set<std::string> labels;
  if (keep_full && part.all_singletons()) {
    // Labelled singletons: keep the labels and give each new state its own
    // block so the partition stays complete.
    for (BlockId b = 0; b < part.num_blocks(); ++b) {
      labels.insert(part.label(b));
      builder.observation_block(p, part.label(b), {game.state_name(part.members(b)[0])});
    }
    for (const auto& [s, names] : extra) {
      for (const auto& n : names) {
        const std::string label = fresh_name(n, labels);
        labels.insert(label);
        builder.observation_block(p, label, {n});
      }
    }
    if (sink) builder.observation_block(p, fresh_name(*sink, labels), {*sink});
    return;
  }
  for (BlockId b = 0; b < part.num_blocks(); ++b) {
    std::vector<std::string> members;
    for (StateId s : part.members(b)) {
      members.push_back(game.state_name(s));
      auto it = extra.find(s);
      if (it != extra.end()) members.insert(members.end(), it->second.begin(), it->second.end());
    }
    labels.insert(part.label(b));
    builder.observation_block(p, part.label(b), std::move(members));
  }
  if (sink) builder.observation_block(p, fresh_name(*sink, labels), {*sink});
}

void copy_header(GameBuilder& builder, const Game& game) {
  builder.actions(Player::One, to_vector(game.actions(Player::One)));
  builder.actions(Player::Two, to_vector(game.actions(Player::Two)));
  for (const auto& s : game.states()) builder.state(s);
  if (game.initial()) builder.initial(game.state_name(*game.initial()));
  if (game.sink()) builder.sink(game.state_name(*game.sink()));
}

std::vector<StateId> embed_by_name(const Game& original, const Game& reduced) {
  std::vector<StateId> e;
  for (const auto& s : original.states()) e.push_back(reduced.state(s));
  return e;
}

std::size_t global_arity(const Game& game, std::optional<std::size_t> n) {
  if (n) {
    if (*n == 0) throw Error(ErrorCode::InvalidArgument, "arity must be positive");
    return *n;
  }
  Rational r = gcd_of_probabilities(all_probabilities(game));
  return static_cast<std::size_t>(r.denominator().get_ui());
}

/// Slot tuple of a probabilistic state for arity n, or NotUniform.
std::vector<StateId> slots_of(const Game& game, StateId s, std::size_t n) {
  std::vector<StateId> slots;
  for (const auto& [t, w] : game.delta(s, 0, 0).entries()) {
    Rational copies = w * Rational(static_cast<long>(n));
    if (!copies.is_integer()) {
      throw Error(ErrorCode::NotUniform, "probability " + w.str() + " at " + game.state_name(s) +
                                             " is not a multiple of 1/" + std::to_string(n));
    }
    slots.insert(slots.end(), copies.numerator().get_ui(), t);
  }
  if (slots.size() != n) {
    throw Error(ErrorCode::NotUniform, "state " + game.state_name(s) + " has " + std::to_string(slots.size()) +
                                           " slots instead of " + std::to_string(n));
  }
  return slots;
}

std::vector<std::string> with_gadgets(const Game& game, Player p, const std::vector<std::string>& gadgets) {
  std::vector<std::string> names = to_vector(game.actions(p));
  for (const auto& g : gadgets) {
    if (game.find_action(p, g)) {
      throw Error(ErrorCode::InvalidArgument, "action " + g + " already exists; gadget names would clash");
    }
    names.push_back(g);
  }
  return names;
}

}  // namespace

// ---------------------------------------------------------------------------
// separation

Reduction separate_interaction(const Game& game) {
  GameBuilder b(game.name());
  copy_header(b, game);
  std::set<std::string> taken = name_set(game);
  const std::size_t n1 = game.num_actions(Player::One);
  const std::size_t n2 = game.num_actions(Player::Two);

  // Pair state names are reserved first so they stay distinct from each other.
  std::vector<std::string> pair_name(game.num_states() * n1 * n2);
  for (StateId s = 0; s < game.num_states(); ++s) {
    for (ActionId a = 0; a < n1; ++a) {
      for (ActionId c = 0; c < n2; ++c) {
        std::string name = fresh_name("(" + game.state_name(s) + "," + game.action_name(Player::One, a) + "," +
                                          game.action_name(Player::Two, c) + ")",
                                      taken);
        taken.insert(name);
        pair_name[(s * n1 + a) * n2 + c] = name;
      }
    }
  }

  std::map<StateId, std::vector<std::string>> extra;
  for (StateId s = 0; s < game.num_states(); ++s) {
    const TurnKind turn = classify_state(game, s).turn;
    for (ActionId a = 0; a < n1; ++a) {
      for (ActionId c = 0; c < n2; ++c) {
        ActionId ra = a;
        ActionId rc = c;
        if (turn == TurnKind::Player1Turn || turn == TurnKind::Probabilistic) rc = 0;
        if (turn == TurnKind::Player2Turn || turn == TurnKind::Probabilistic) ra = 0;
        const std::string& here = game.state_name(s);
        b.transition(here, game.action_name(Player::One, a), game.action_name(Player::Two, c),
                     point_to(pair_name[(s * n1 + ra) * n2 + rc]));
        const std::string& pair = pair_name[(s * n1 + a) * n2 + c];
        b.state(pair);
        b.transition(pair, std::string(GameBuilder::kAnyAction), std::string(GameBuilder::kAnyAction),
                     named(game, game.delta(s, a, c)));
        extra[s].push_back(pair);
      }
    }
  }
  for (Player p : {Player::One, Player::Two}) extend_observations(b, game, p, true, extra, std::nullopt);

  Reduction out{b.build(), {}};
  auto& w = out.witness;
  w.kind = ReductionKind::Separate;
  w.stutter = Stutter::Double;
  w.original_states = game.num_states();
  w.reduced_states = out.game.num_states();
  w.embedding = embed_by_name(game, out.game);
  for (const auto& [s, pairs] : extra) {
    for (const auto& pair : pairs) w.aux[out.game.state(pair)] = s;
  }
  if (game.sink()) w.sink = out.game.state(game.state_name(*game.sink()));
  return out;
}

// ---------------------------------------------------------------------------
// uniform-n-ary normal form

Reduction uniformize(const Game& game) {
  std::vector<bool> prob = require_separated(game);
  Reduction out{game, {}};
  auto& w = out.witness;
  w.kind = ReductionKind::Uniformize;
  w.n = global_arity(game, std::nullopt);
  w.stutter = Stutter::None;
  w.original_states = w.reduced_states = game.num_states();
  w.embedding.resize(game.num_states());
  std::iota(w.embedding.begin(), w.embedding.end(), 0);
  w.probabilistic = prob;
  for (StateId s = 0; s < game.num_states(); ++s) {
    if (prob[s]) w.succ[s] = slots_of(game, s, w.n);
  }
  if (game.sink()) w.sink = game.sink();
  return out;
}

// ---------------------------------------------------------------------------
// concurrent Latin-square gadget

Reduction coc_gadget(const Game& game, std::optional<std::size_t> arity) {
  std::vector<bool> prob = require_separated(game);
  const std::size_t n = global_arity(game, arity);
  std::map<StateId, std::vector<StateId>> succ;
  for (StateId s = 0; s < game.num_states(); ++s) {
    if (prob[s]) succ[s] = slots_of(game, s, n);
  }

  const std::vector<std::string> gadgets = gadget_action_names(n);
  const std::vector<std::string> acts1 = with_gadgets(game, Player::One, gadgets);
  const std::vector<std::string> acts2 = with_gadgets(game, Player::Two, gadgets);
  const std::size_t n1 = game.num_actions(Player::One);
  const std::size_t n2 = game.num_actions(Player::Two);

  GameBuilder b(game.name());
  copy_header(b, game);
  b.actions(Player::One, acts1);
  b.actions(Player::Two, acts2);

  // Gadget i is acts[n_orig + i]; the original alphabets are sorted, so
  // original index 0 is the smallest original action.
  for (StateId s = 0; s < game.num_states(); ++s) {
    const std::string& here = game.state_name(s);
    for (std::size_t x = 0; x < acts1.size(); ++x) {
      for (std::size_t y = 0; y < acts2.size(); ++y) {
        if (prob[s]) {
          // One probabilistic state at a time becomes the circulant matrix;
          // an original action behaves like gadget 0.
          std::size_t i = x >= n1 ? x - n1 : 0;
          std::size_t j = y >= n2 ? y - n2 : 0;
          b.transition(here, acts1[x], acts2[y], point_to(game.state_name(succ[s][(i + j) % n])));
        } else {
          ActionId a = x >= n1 ? 0 : x;
          ActionId c = y >= n2 ? 0 : y;
          b.transition(here, acts1[x], acts2[y], named(game, game.delta(s, a, c)));
        }
      }
    }
  }
  for (Player p : {Player::One, Player::Two}) extend_observations(b, game, p, true, {}, std::nullopt);

  Reduction out{b.build(), {}};
  auto& w = out.witness;
  w.kind = ReductionKind::CocGadget;
  w.n = n;
  w.stutter = Stutter::None;
  w.original_states = game.num_states();
  w.reduced_states = out.game.num_states();
  w.embedding = embed_by_name(game, out.game);
  w.probabilistic = prob;
  w.succ = std::move(succ);
  if (game.sink()) w.sink = out.game.state(game.state_name(*game.sink()));
  return out;
}

// ---------------------------------------------------------------------------
// one-sided turn-based gadget

Reduction ost_gadget(const Game& game, Player informed, std::optional<std::size_t> arity) {
  std::vector<bool> prob = require_separated(game);
  const std::size_t n = global_arity(game, arity);
  std::map<StateId, std::vector<StateId>> succ;
  for (StateId s = 0; s < game.num_states(); ++s) {
    if (prob[s]) succ[s] = slots_of(game, s, n);
  }
  const Player chooser = opponent(informed);

  const std::vector<std::string> gadgets = gadget_action_names(n);
  const std::vector<std::string> acts1 = with_gadgets(game, Player::One, gadgets);
  const std::vector<std::string> acts2 = with_gadgets(game, Player::Two, gadgets);
  const std::size_t n1 = game.num_actions(Player::One);
  const std::size_t n2 = game.num_actions(Player::Two);

  GameBuilder b(game.name());
  copy_header(b, game);
  b.actions(Player::One, acts1);
  b.actions(Player::Two, acts2);

  std::set<std::string> taken = name_set(game);
  std::map<StateId, std::vector<std::string>> aux_names;
  for (const auto& [s, slots] : succ) {
    for (std::size_t i = 0; i < n; ++i) {
      std::string name = fresh_name("(" + game.state_name(s) + "," + std::to_string(i) + ")", taken);
      taken.insert(name);
      aux_names[s].push_back(name);
    }
  }
  std::optional<std::string> sink;
  if (!succ.empty()) {
    sink = fresh_name("sink", taken);
    b.state(*sink);
    b.transition(*sink, std::string(GameBuilder::kAnyAction), std::string(GameBuilder::kAnyAction),
                 point_to(*sink));
    b.sink(*sink);
  }

  auto gadget_index = [&](Player p, std::size_t x) -> std::optional<std::size_t> {
    std::size_t base = p == Player::One ? n1 : n2;
    if (x < base) return std::nullopt;
    return x - base;
  };

  for (StateId s = 0; s < game.num_states(); ++s) {
    const std::string& here = game.state_name(s);
    if (prob[s]) {
      // The informed player picks the row, then the other player the column.
      for (std::size_t x = 0; x < acts1.size(); ++x) {
        for (std::size_t y = 0; y < acts2.size(); ++y) {
          auto i = informed == Player::One ? gadget_index(Player::One, x) : gadget_index(Player::Two, y);
          b.transition(here, acts1[x], acts2[y], point_to(i ? aux_names[s][*i] : *sink));
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        const std::string& row = aux_names[s][i];
        b.state(row);
        for (std::size_t x = 0; x < acts1.size(); ++x) {
          for (std::size_t y = 0; y < acts2.size(); ++y) {
            auto j = chooser == Player::One ? gadget_index(Player::One, x) : gadget_index(Player::Two, y);
            b.transition(row, acts1[x], acts2[y],
                         point_to(j ? game.state_name(succ[s][(i + *j) % n]) : *sink));
          }
        }
      }
      continue;
    }
    // Gadget actions are illegal for a player whose action matters here and
    // alias the smallest original action otherwise, so turn-based states
    // stay turn-based.
    const TurnKind turn = classify_state(game, s).turn;
    const bool controls1 = turn == TurnKind::Player1Turn || turn == TurnKind::Concurrent;
    const bool controls2 = turn == TurnKind::Player2Turn || turn == TurnKind::Concurrent;
    for (std::size_t x = 0; x < acts1.size(); ++x) {
      for (std::size_t y = 0; y < acts2.size(); ++y) {
        bool g1 = x >= n1;
        bool g2 = y >= n2;
        if (sink && ((g1 && controls1) || (g2 && controls2))) {
          b.transition(here, acts1[x], acts2[y], point_to(*sink));
          continue;
        }
        b.transition(here, acts1[x], acts2[y], named(game, game.delta(s, g1 ? 0 : x, g2 ? 0 : y)));
      }
    }
  }

  extend_observations(b, game, chooser, false, aux_names, sink);
  extend_observations(b, game, informed, true, aux_names, sink);

  Reduction out{b.build(), {}};
  auto& w = out.witness;
  w.kind = ReductionKind::OstGadget;
  w.n = n;
  w.stutter = Stutter::Probabilistic;
  w.informed = informed;
  w.original_states = game.num_states();
  w.reduced_states = out.game.num_states();
  w.embedding = embed_by_name(game, out.game);
  w.probabilistic = prob;
  for (const auto& [s, names] : aux_names) {
    for (const auto& name : names) w.aux[out.game.state(name)] = s;
  }
  w.succ = std::move(succ);
  if (sink) w.sink = out.game.state(*sink);
  return out;
}

// ---------------------------------------------------------------------------
// fair-coin trees

Reduction naive_binary_reduction(const Game& game) {
  std::vector<bool> prob = require_separated(game);
  GameBuilder b(game.name());
  copy_header(b, game);
  std::set<std::string> taken = name_set(game);
  std::map<StateId, std::vector<std::string>> extra;
  const std::string any(GameBuilder::kAnyAction);

  for (StateId s = 0; s < game.num_states(); ++s) {
    const std::string& here = game.state_name(s);
    if (!prob[s]) {
      for (ActionId a = 0; a < game.num_actions(Player::One); ++a) {
        for (ActionId c = 0; c < game.num_actions(Player::Two); ++c) {
          b.transition(here, game.action_name(Player::One, a), game.action_name(Player::Two, c),
                       named(game, game.delta(s, a, c)));
        }
      }
      continue;
    }
    const Distribution& d = game.delta(s, 0, 0);
    mpz_class q = 1;
    for (const auto& [t, w] : d.entries()) mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), w.denominator().get_mpz_t());
    std::size_t depth = 0;
    while ((mpz_class(1) << depth) < q) ++depth;
    if (depth <= 1) {
      b.transition(here, any, any, named(game, d));
      continue;
    }
    // Leaves in canonical order, then loops back to the source.
    std::vector<std::string> leaves;
    for (const auto& [t, w] : d.entries()) {
      mpz_class copies = w.numerator() * (q / w.denominator());
      leaves.insert(leaves.end(), copies.get_ui(), game.state_name(t));
    }
    leaves.resize(std::size_t{1} << depth, here);

    auto node_name = [&](std::size_t level, std::size_t index) {
      if (level == 0) return here;
      std::string bits;
      for (std::size_t k = level; k-- > 0;) bits += ((index >> k) & 1U) ? '1' : '0';
      return "(" + here + "," + bits + ")";
    };
    std::map<std::string, std::string> fresh;  // tentative -> actual
    for (std::size_t level = 1; level < depth; ++level) {
      for (std::size_t index = 0; index < (std::size_t{1} << level); ++index) {
        std::string name = fresh_name(node_name(level, index), taken);
        taken.insert(name);
        fresh[node_name(level, index)] = name;
        b.state(name);
        extra[s].push_back(name);
      }
    }
    auto actual = [&](std::size_t level, std::size_t index) {
      return level == 0 ? here : fresh[node_name(level, index)];
    };
    const Rational half(1, 2);
    for (std::size_t level = 0; level < depth; ++level) {
      for (std::size_t index = 0; index < (std::size_t{1} << level); ++index) {
        std::vector<std::pair<std::string, Rational>> next;
        if (level + 1 < depth) {
          next = {{actual(level + 1, 2 * index), half}, {actual(level + 1, 2 * index + 1), half}};
        } else {
          next = {{leaves[2 * index], half}, {leaves[2 * index + 1], half}};
        }
        b.transition(actual(level, index), any, any, next);
      }
    }
  }
  for (Player p : {Player::One, Player::Two}) extend_observations(b, game, p, true, extra, std::nullopt);

  Reduction out{b.build(), {}};
  auto& w = out.witness;
  w.kind = ReductionKind::NaiveBinary;
  w.n = 2;
  w.stutter = Stutter::None;
  w.original_states = game.num_states();
  w.reduced_states = out.game.num_states();
  w.embedding = embed_by_name(game, out.game);
  w.probabilistic = prob;
  for (const auto& [s, names] : extra) {
    for (const auto& name : names) w.aux[out.game.state(name)] = s;
  }
  if (game.sink()) w.sink = out.game.state(game.state_name(*game.sink()));
  return out;
}

// ---------------------------------------------------------------------------
// objectives

std::size_t lift_horizon(std::size_t h, const ReductionWitness& witness) {
  switch (witness.stutter) {
    case Stutter::None: return h;
    case Stutter::Double: return 2 * h;
    case Stutter::Probabilistic: return h + (h + 1) / 2;
  }
  return h;
}

Objective lift_objective(const Objective& objective, const ReductionWitness& witness) {
  auto embed = [&](const StateSet& set, bool with_aux) {
    std::vector<StateId> out;
    for (StateId s : set) {
      if (s >= witness.embedding.size()) {
        throw Error(ErrorCode::IncompatibleWitness, "objective state id " + std::to_string(s) +
                                                        " is outside the witness embedding");
      }
      out.push_back(witness.embedding[s]);
    }
    if (with_aux) {
      for (const auto& [r, src] : witness.aux) {
        if (contains(set, src)) out.push_back(r);
      }
    }
    // The sink is never an original state, so it is never in the image.
    return make_state_set(std::move(out));
  };

  struct Visitor {
    const ReductionWitness& w;
    decltype(embed)& lift;
    Objective operator()(const Reach& o) const { return Reach{lift(o.target, false)}; }
    Objective operator()(const Safety& o) const { return Safety{lift(o.target, true)}; }
    Objective operator()(const Buechi& o) const { return Buechi{lift(o.target, true)}; }
    Objective operator()(const CoBuechi& o) const { return CoBuechi{lift(o.target, true)}; }
    Objective operator()(const Parity& o) const {
      if (o.priority.size() != w.original_states) {
        throw Error(ErrorCode::IncompatibleWitness, "parity map does not match the original game");
      }
      Parity out;
      out.priority.assign(w.reduced_states, 0);
      unsigned max = 0;
      for (StateId s = 0; s < o.priority.size(); ++s) {
        out.priority[w.embedding[s]] = o.priority[s];
        max = std::max(max, o.priority[s]);
      }
      for (const auto& [r, src] : w.aux) out.priority[r] = o.priority[src];
      if (w.sink) out.priority[*w.sink] = max % 2 == 1 ? max : max + 1;
      return out;
    }
    Objective operator()(const BoundedReach& o) const {
      if (w.kind == ReductionKind::NaiveBinary) {
        throw Error(ErrorCode::IncompatibleWitness,
                    "bounded reachability has no fixed horizon through the naive binary reduction");
      }
      return BoundedReach{lift(o.target, false), lift_horizon(o.horizon, w)};
    }
  };
  return std::visit(Visitor{witness, embed}, objective);
}

// ---------------------------------------------------------------------------
// strategy translation

namespace {

enum class Role { Real, Gadget, Ignored };

class TranslatedPolicy : public Policy {
 public:
  TranslatedPolicy(const Policy& original, const Game& original_game, const Game& reduced_game,
                   const ReductionWitness& witness, StateId init)
      : original_(original), from_(original_game), to_(reduced_game), w_(witness) {
    if (witness.embedding.size() != original_game.num_states() ||
        witness.reduced_states != reduced_game.num_states()) {
      throw Error(ErrorCode::IncompatibleWitness, "witness does not match the games");
    }
    if (init >= original_game.num_states()) throw Error(ErrorCode::UnknownIdentifier, "unknown initial state");
    init_probabilistic_ = !witness.probabilistic.empty() && witness.probabilistic[init];
    const Player p = original.owner();
    for (ActionId a = 0; a < original_game.num_actions(p); ++a) {
      action_map_.push_back(reduced_game.action(p, original_game.action_name(p, a)));
    }
    for (const auto& g : gadget_action_names(witness.n)) {
      if (auto id = reduced_game.find_action(p, g)) gadgets_.push_back(*id);
    }
  }

  Player owner() const override { return original_.owner(); }
  std::size_t horizon() const override { return lift_horizon(original_.horizon(), w_); }

  std::optional<ActionDistribution> choose(std::span<const BlockId> history) const override {
    if (history.empty()) return std::nullopt;
    const std::size_t r = history.size() - 1;
    const Role role = role_at(r);
    if (role == Role::Gadget && !gadgets_.empty()) {
      ActionDistribution uniform;
      const Rational weight(1, static_cast<long>(gadgets_.size()));
      for (ActionId g : gadgets_) uniform.emplace_back(g, weight);
      return normalize_choice(std::move(uniform));
    }
    if (role != Role::Real) return pure_choice(action_map_[0]);

    auto real = project(history);
    if (!real) return std::nullopt;
    // Past the original horizon the outcome is already decided.
    if (real->size() > original_.horizon()) return pure_choice(action_map_[0]);
    auto choice = original_.choose(*real);
    if (!choice) return std::nullopt;
    ActionDistribution mapped;
    for (const auto& [a, wt] : *choice) mapped.emplace_back(action_map_.at(a), wt);
    return normalize_choice(std::move(mapped));
  }

 private:
  ObsHistory history_key(std::span<const BlockId> history) const override {
    // Choices only depend on the original positions, so histories that agree
    // there are interchangeable. Unmappable histories keep their raw form.
    if (auto real = project(history)) {
      ObsHistory key = original_.history_key(*real);
      key.insert(key.begin(), 0);
      return key;
    }
    ObsHistory key(history.begin(), history.end());
    key.insert(key.begin(), 1);
    return key;
  }

  /// Original blocks along the original positions of a reduced history.
  std::optional<ObsHistory> project(std::span<const BlockId> history) const {
    ObsHistory real;
    for (std::size_t k = 0; k < history.size(); ++k) {
      if (!in_original(k)) continue;
      const std::string& label = to_.observations(owner()).label(history[k]);
      auto block = from_.observations(owner()).find_label(label);
      if (!block) return std::nullopt;
      real.push_back(*block);
    }
    return real;
  }

  /// Whether history position r is the image of an original position, as
  /// opposed to an auxiliary state the reduction inserted.
  bool in_original(std::size_t r) const {
    switch (w_.kind) {
      case ReductionKind::Separate: return r % 2 == 0;
      case ReductionKind::OstGadget: return r % 3 != (init_probabilistic_ ? 1U : 2U);
      default: return true;
    }
  }

  Role role_at(std::size_t r) const {
    switch (w_.kind) {
      case ReductionKind::Separate: return r % 2 == 0 ? Role::Real : Role::Ignored;
      case ReductionKind::Uniformize: return Role::Real;
      case ReductionKind::CocGadget: return (r % 2 == 0) == init_probabilistic_ ? Role::Gadget : Role::Real;
      case ReductionKind::OstGadget:
        // Action states keep their position in each block of three; the
        // probabilistic state and its row state are gadget turns.
        return r % 3 == (init_probabilistic_ ? 2U : 0U) ? Role::Real : Role::Gadget;
      case ReductionKind::NaiveBinary: break;
    }
    return Role::Ignored;
  }

  const Policy& original_;
  const Game& from_;
  const Game& to_;
  ReductionWitness w_;
  bool init_probabilistic_ = false;
  std::vector<ActionId> action_map_;
  std::vector<ActionId> gadgets_;
};

}  // namespace

std::unique_ptr<Policy> translate_policy(const Policy& original, const Game& original_game,
                                         const Game& reduced_game, const ReductionWitness& witness, StateId init) {
  if (witness.kind == ReductionKind::NaiveBinary) {
    throw Error(ErrorCode::IncompatibleWitness, "strategies do not translate through the naive binary reduction");
  }
  return std::make_unique<TranslatedPolicy>(original, original_game, reduced_game, witness, init);
}

Strategy materialize(const Policy& policy, const Game& game, StateId init, std::size_t horizon) {
  Strategy out(policy.owner(), horizon);
  for (const auto& h : reachable_histories(game, init, policy.owner(), horizon)) {
    if (auto choice = policy.choose(h)) out.set(h, *choice);
  }
  return out;
}

}  // namespace rfg
