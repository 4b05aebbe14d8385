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

#include "rfg/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "rfg/error.hpp"

namespace rfg {

namespace {

struct Token {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

bool blank(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

/// Splits one line into tokens; braces are tokens on their own.
std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  bool first = true;
  while (i < line.size()) {
    if (blank(line[i])) {
      ++i;
      continue;
    }
    if (line[i] == '#' && (first || i + 1 == line.size() || blank(line[i + 1]))) break;
    first = false;
    if (line[i] == '{' || line[i] == '}') {
      out.push_back({std::string(1, line[i]), line_no, i + 1});
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !blank(line[i]) && line[i] != '{' && line[i] != '}') ++i;
    out.push_back({std::string(line.substr(start, i - start)), line_no, start + 1});
  }
  return out;
}

std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    auto tokens = tokenize(line, line_no);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const Token& at, const std::string& message) {
  throw ParseError(at.line, at.column, message);
}

bool valid_identifier(const std::string& id) {
  if (id.empty() || id == "-" || id == "->") return false;
  for (char c : id) {
    if (c == ':' || c == '{' || c == '}' || blank(c)) return false;
  }
  return true;
}

void expect_identifier(const Token& t, const char* what) {
  if (!valid_identifier(t.text)) fail(t, std::string("expected ") + what + ", found '" + t.text + "'");
}

Rational parse_rational(const Token& t, std::string_view text) {
  auto r = Rational::parse(text);
  if (!r) fail(t, "malformed rational '" + std::string(text) + "'");
  return *r;
}

std::size_t parse_count(const Token& t) {
  if (t.text.empty() || t.text.size() > 9) fail(t, "expected a number, found '" + t.text + "'");
  for (char c : t.text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) fail(t, "expected a number, found '" + t.text + "'");
  }
  return std::stoul(t.text);
}

/// "name:weight" or "name" (weight 1).
std::pair<std::string, Rational> parse_weighted(const Token& t) {
  auto colon = t.text.find(':');
  std::string name = t.text.substr(0, colon);
  if (!valid_identifier(name)) fail(t, "expected an identifier, found '" + name + "'");
  if (colon == std::string::npos) return {name, Rational(1)};
  return {name, parse_rational(t, std::string_view(t.text).substr(colon + 1))};
}

enum class DeclaredKind { None, P1, P2, Prob };

struct StateDecl {
  Token at;
  DeclaredKind kind = DeclaredKind::None;
};

struct Reference {
  std::string name;
  Token at;
};

}  // namespace

GameDocument parse_game_document(std::string_view text, const ParseOptions& options) {
  const auto lines = tokenize_lines(text);
  std::optional<std::string> name;
  std::optional<Token> actions_at[2];
  std::vector<std::string> actions[2];
  std::map<std::string, StateDecl> states;
  std::vector<std::string> state_order;
  std::vector<Reference> state_refs;
  std::vector<Reference> action_refs[2];
  std::optional<Reference> init, sink;
  bool obs_full[2] = {false, false};
  std::optional<Token> obs_at[2];
  struct Block {
    std::optional<std::string> label;
    std::vector<std::string> members;
    Token at;
  };
  std::vector<Block> blocks[2];
  struct Trans {
    std::string state, a1, a2;
    std::vector<std::pair<std::string, Rational>> succ;
    Token at;
  };
  std::vector<Trans> transitions;
  std::optional<std::string> current;

  struct RawObjective {
    std::string kind;
    std::size_t horizon = 0;
    std::vector<std::pair<std::string, Rational>> entries;
    Token at;
  };
  std::optional<RawObjective> raw_objective;

  for (const auto& toks : lines) {
    const Token& head = toks[0];
    const std::string& kw = head.text;
    auto need_args = [&](std::size_t n) {
      if (toks.size() != n + 1) {
        fail(toks.size() > n + 1 ? toks[n + 1] : head,
             "'" + kw + "' takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
      }
    };
    if (kw == "game") {
      need_args(1);
      if (name) fail(head, "duplicate game header");
      name = toks[1].text;
    } else if (kw == "actions1" || kw == "actions2") {
      const int p = kw == "actions1" ? 0 : 1;
      if (toks.size() < 2) fail(head, "'" + kw + "' needs at least one action");
      if (actions_at[p]) fail(head, "duplicate '" + kw + "'");
      actions_at[p] = head;
      std::set<std::string> seen;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        expect_identifier(toks[i], "an action");
        if (!seen.insert(toks[i].text).second) fail(toks[i], "duplicate action '" + toks[i].text + "'");
        actions[p].push_back(toks[i].text);
      }
    } else if (kw == "init" || kw == "sink") {
      need_args(1);
      expect_identifier(toks[1], "a state");
      (kw == "init" ? init : sink) = Reference{toks[1].text, toks[1]};
    } else if (kw == "obs1" || kw == "obs2") {
      const int p = kw == "obs1" ? 0 : 1;
      if (!obs_at[p]) obs_at[p] = head;
      if (toks.size() == 2 && toks[1].text == "full") {
        if (!blocks[p].empty()) fail(toks[1], "'full' mixed with explicit blocks");
        obs_full[p] = true;
        continue;
      }
      if (obs_full[p]) fail(head, "explicit blocks after 'full'");
      std::size_t i = 1;
      if (i >= toks.size()) fail(head, "'" + kw + "' needs 'full' or blocks");
      while (i < toks.size()) {
        Block block{std::nullopt, {}, toks[i]};
        if (toks[i].text != "{") {
          expect_identifier(toks[i], "a block label or '{'");
          block.label = toks[i].text;
          ++i;
          if (i >= toks.size() || toks[i].text != "{") fail(i < toks.size() ? toks[i] : toks.back(), "expected '{'");
        }
        ++i;
        while (i < toks.size() && toks[i].text != "}") {
          expect_identifier(toks[i], "a state");
          state_refs.push_back({toks[i].text, toks[i]});
          block.members.push_back(toks[i].text);
          ++i;
        }
        if (i >= toks.size()) fail(toks.back(), "unterminated block");
        if (block.members.empty()) fail(toks[i], "empty observation block");
        ++i;
        blocks[p].push_back(std::move(block));
      }
    } else if (kw == "state") {
      if (toks.size() < 2 || toks.size() > 3) fail(head, "'state' takes an identifier and an optional kind");
      expect_identifier(toks[1], "a state");
      DeclaredKind kind = DeclaredKind::None;
      if (toks.size() == 3) {
        const std::string& k = toks[2].text;
        if (k == "p1") {
          kind = DeclaredKind::P1;
        } else if (k == "p2") {
          kind = DeclaredKind::P2;
        } else if (k == "prob") {
          kind = DeclaredKind::Prob;
        } else {
          fail(toks[2], "unknown state kind '" + k + "' (expected p1, p2 or prob)");
        }
      }
      if (states.count(toks[1].text) != 0) fail(toks[1], "duplicate state '" + toks[1].text + "'");
      states[toks[1].text] = StateDecl{toks[1], kind};
      state_order.push_back(toks[1].text);
      current = toks[1].text;
    } else if (kw == "trans") {
      if (!current) fail(head, "'trans' before any 'state'");
      std::size_t arrow = 1;
      while (arrow < toks.size() && toks[arrow].text != "->") ++arrow;
      if (arrow == toks.size()) fail(head, "missing '->'");
      const std::size_t given = arrow - 1;
      const DeclaredKind kind = states[*current].kind;
      Trans t{*current, "-", "-", {}, head};
      auto action_token = [&](const Token& tok, int p) {
        if (tok.text != "-") {
          expect_identifier(tok, "an action");
          action_refs[p].push_back({tok.text, tok});
        }
        return tok.text;
      };
      if (given == 2) {
        t.a1 = action_token(toks[1], 0);
        t.a2 = action_token(toks[2], 1);
      } else if (given == 1 && kind == DeclaredKind::P1) {
        t.a1 = action_token(toks[1], 0);
      } else if (given == 1 && kind == DeclaredKind::P2) {
        t.a2 = action_token(toks[1], 1);
      } else if (given == 0 && kind == DeclaredKind::Prob) {
        // both wildcards
      } else {
        fail(head, "'trans' at state '" + *current + "' needs " +
                       std::string(kind == DeclaredKind::P1 || kind == DeclaredKind::P2 ? "one or two actions"
                                                                                         : kind == DeclaredKind::Prob
                                                                                               ? "zero or two actions"
                                                                                               : "two actions"));
      }
      if (arrow + 1 == toks.size()) fail(toks[arrow], "no successors after '->'");
      Rational total;
      for (std::size_t i = arrow + 1; i < toks.size(); ++i) {
        auto succ = parse_weighted(toks[i]);
        state_refs.push_back({succ.first, toks[i]});
        if (options.validate && succ.second.sign() <= 0) {
          fail(toks[i], "non-positive weight " + succ.second.str());
        }
        total += succ.second;
        t.succ.push_back(std::move(succ));
      }
      if (options.validate && total != Rational(1)) {
        fail(toks[arrow + 1], "weights sum to " + total.str() + " ≠ 1 at line " + std::to_string(head.line));
      }
      transitions.push_back(std::move(t));
    } else if (kw == "objective") {
      if (raw_objective) fail(head, "duplicate objective");
      if (toks.size() < 2) fail(head, "'objective' needs a kind");
      RawObjective obj{toks[1].text, 0, {}, head};
      std::size_t i = 2;
      static const std::set<std::string> kinds = {"reach", "safety", "buchi", "cobuchi", "parity", "bounded-reach"};
      if (kinds.count(obj.kind) == 0) fail(toks[1], "unknown objective '" + obj.kind + "'");
      if (obj.kind == "bounded-reach") {
        if (i >= toks.size()) fail(toks[1], "bounded-reach needs a horizon");
        obj.horizon = parse_count(toks[i]);
        ++i;
      }
      if (i >= toks.size() || toks[i].text != "{") fail(i < toks.size() ? toks[i] : toks.back(), "expected '{'");
      ++i;
      while (i < toks.size() && toks[i].text != "}") {
        auto entry = parse_weighted(toks[i]);
        if (obj.kind == "parity") {
          if (toks[i].text.find(':') == std::string::npos || !entry.second.is_integer() || entry.second.sign() < 0) {
            fail(toks[i], "parity entries are <state>:<priority>");
          }
        } else if (toks[i].text.find(':') != std::string::npos) {
          fail(toks[i], "unexpected weight in a state set");
        }
        state_refs.push_back({entry.first, toks[i]});
        obj.entries.push_back(std::move(entry));
        ++i;
      }
      if (i >= toks.size()) fail(toks.back(), "unterminated objective set");
      if (i + 1 != toks.size()) fail(toks[i + 1], "trailing tokens after objective");
      raw_objective = std::move(obj);
    } else {
      fail(head, "unknown keyword '" + kw + "'");
    }
  }

  const Token origin{"", 1, 1};
  if (!name) fail(origin, "missing 'game' header");
  for (int p = 0; p < 2; ++p) {
    if (!actions_at[p]) fail(origin, std::string("missing 'actions") + (p == 0 ? "1" : "2") + "'");
    if (!obs_at[p]) fail(origin, std::string("missing 'obs") + (p == 0 ? "1" : "2") + "'");
  }
  // Names are resolved once the whole file is read, so order is free.
  for (const auto& r : state_refs) {
    if (states.count(r.name) == 0) fail(r.at, "unknown state '" + r.name + "'");
  }
  for (const auto* r : {&init, &sink}) {
    if (*r && states.count((*r)->name) == 0) fail((*r)->at, "unknown state '" + (*r)->name + "'");
  }
  for (int p = 0; p < 2; ++p) {
    std::set<std::string> known(actions[p].begin(), actions[p].end());
    for (const auto& r : action_refs[p]) {
      if (known.count(r.name) == 0) fail(r.at, "unknown action '" + r.name + "' for player " + std::to_string(p + 1));
    }
  }

  GameBuilder builder(*name);
  builder.actions(Player::One, actions[0]);
  builder.actions(Player::Two, actions[1]);
  for (const auto& s : state_order) builder.state(s);
  for (const auto& t : transitions) builder.transition(t.state, t.a1, t.a2, t.succ);
  for (int p = 0; p < 2; ++p) {
    const Player who = p == 0 ? Player::One : Player::Two;
    if (obs_full[p]) {
      builder.full_observation(who);
      continue;
    }
    for (const auto& b : blocks[p]) {
      std::string label = b.label.value_or(*std::min_element(b.members.begin(), b.members.end()));
      builder.observation_block(who, label, b.members);
    }
  }
  if (init) builder.initial(init->name);
  if (sink) builder.sink(sink->name);

  GameDocument doc{builder.build(), std::nullopt};
  const Game& g = doc.game;

  if (options.validate) {
    for (const auto& s : state_order) {
      const StateId id = g.state(s);
      for (ActionId a = 0; a < g.num_actions(Player::One); ++a) {
        for (ActionId b = 0; b < g.num_actions(Player::Two); ++b) {
          if (g.delta(id, a, b).empty()) {
            fail(states[s].at, "missing transition at (" + s + "," + g.action_name(Player::One, a) + "," +
                                   g.action_name(Player::Two, b) + ")");
          }
        }
      }
    }
    ValidationReport report = validate(g);
    if (!report.ok()) {
      // Whatever is left concerns the observation partitions.
      const std::string& v = report.violations.front();
      const Token& at = v.rfind("obs2", 0) == 0 && obs_at[1] ? *obs_at[1] : (obs_at[0] ? *obs_at[0] : origin);
      fail(at, v);
    }
  }

  if (raw_objective) {
    const auto& o = *raw_objective;
    std::vector<StateId> ids;
    for (const auto& [n, w] : o.entries) ids.push_back(g.state(n));
    if (o.kind == "parity") {
      Parity parity;
      parity.priority.assign(g.num_states(), 0);
      std::vector<bool> given(g.num_states(), false);
      for (std::size_t i = 0; i < ids.size(); ++i) {
        parity.priority[ids[i]] = static_cast<unsigned>(o.entries[i].second.numerator().get_ui());
        given[ids[i]] = true;
      }
      for (StateId s = 0; s < g.num_states(); ++s) {
        if (!given[s]) fail(o.at, "parity objective has no priority for '" + g.state_name(s) + "'");
      }
      doc.objective = parity;
    } else {
      StateSet set = make_state_set(ids);
      if (o.kind == "reach") doc.objective = Reach{set};
      if (o.kind == "safety") doc.objective = Safety{set};
      if (o.kind == "buchi") doc.objective = Buechi{set};
      if (o.kind == "cobuchi") doc.objective = CoBuechi{set};
      if (o.kind == "bounded-reach") doc.objective = BoundedReach{set, o.horizon};
    }
  }
  return doc;
}

Game parse_game(std::string_view text) { return parse_game_document(text).game; }

namespace {

std::string join_names(const Game& game, const StateSet& set) {
  std::string out;
  for (StateId s : set) out += " " + game.state_name(s);
  return out;
}

std::string successors(const Game& game, const Distribution& d) {
  std::string out;
  for (const auto& [t, w] : d.entries()) out += " " + game.state_name(t) + ":" + w.str();
  return out;
}

}  // namespace

std::string serialize_objective(const Game& game, const Objective& objective) {
  std::string out = std::string("objective ") + objective_keyword(objective);
  if (const auto* parity = std::get_if<Parity>(&objective)) {
    out += " {";
    for (StateId s = 0; s < parity->priority.size(); ++s) {
      out += " " + game.state_name(s) + ":" + std::to_string(parity->priority[s]);
    }
    return out + " }\n";
  }
  if (const auto* br = std::get_if<BoundedReach>(&objective)) out += " " + std::to_string(br->horizon);
  const StateSet& set = std::visit(
      [](const auto& o) -> const StateSet& {
        if constexpr (std::is_same_v<std::decay_t<decltype(o)>, Parity>) {
          static const StateSet empty;
          return empty;
        } else {
          return o.target;
        }
      },
      objective);
  return out + " {" + join_names(game, set) + " }\n";
}

std::string serialize_game(const Game& game, const std::optional<Objective>& objective) {
  std::ostringstream out;
  out << "game " << game.name() << "\n";
  for (Player p : {Player::One, Player::Two}) {
    out << "actions" << static_cast<int>(p);
    for (const auto& a : game.actions(p)) out << " " << a;
    out << "\n";
  }
  if (game.initial()) out << "init " << game.state_name(*game.initial()) << "\n";
  if (game.sink()) out << "sink " << game.state_name(*game.sink()) << "\n";
  for (Player p : {Player::One, Player::Two}) {
    const auto& part = game.observations(p);
    if (part.is_full_marker()) {
      out << "obs" << static_cast<int>(p) << " full\n";
      continue;
    }
    for (BlockId b = 0; b < part.num_blocks(); ++b) {
      out << "obs" << static_cast<int>(p) << " " << part.label(b) << " {";
      for (StateId s : part.members(b)) out << " " << game.state_name(s);
      out << " }\n";
    }
  }
  const std::size_t n1 = game.num_actions(Player::One);
  const std::size_t n2 = game.num_actions(Player::Two);
  for (StateId s = 0; s < game.num_states(); ++s) {
    out << "state " << game.state_name(s);
    const TurnKind turn = classify_state(game, s).turn;
    switch (turn) {
      case TurnKind::Probabilistic:
        out << " prob\n";
        if (!game.delta(s, 0, 0).empty()) out << "trans ->" << successors(game, game.delta(s, 0, 0)) << "\n";
        break;
      case TurnKind::Player1Turn:
        out << " p1\n";
        for (ActionId a = 0; a < n1; ++a) {
          if (game.delta(s, a, 0).empty()) continue;
          out << "trans " << game.action_name(Player::One, a) << " ->" << successors(game, game.delta(s, a, 0))
              << "\n";
        }
        break;
      case TurnKind::Player2Turn:
        out << " p2\n";
        for (ActionId b = 0; b < n2; ++b) {
          if (game.delta(s, 0, b).empty()) continue;
          out << "trans " << game.action_name(Player::Two, b) << " ->" << successors(game, game.delta(s, 0, b))
              << "\n";
        }
        break;
      case TurnKind::Concurrent:
        out << "\n";
        for (ActionId a = 0; a < n1; ++a) {
          for (ActionId b = 0; b < n2; ++b) {
            if (game.delta(s, a, b).empty()) continue;
            out << "trans " << game.action_name(Player::One, a) << " " << game.action_name(Player::Two, b) << " ->"
                << successors(game, game.delta(s, a, b)) << "\n";
          }
        }
        break;
    }
  }
  if (objective) out << serialize_objective(game, *objective);
  return out.str();
}

// ---------------------------------------------------------------------------
// strategies

Strategy parse_strategy(std::string_view text, const Game& game) {
  const auto lines = tokenize_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty strategy file");
  const auto& header = lines[0];
  if (header.size() != 4 || header[0].text != "strategy" || header[2].text != "horizon") {
    fail(header[0], "expected 'strategy <1|2> horizon <h>'");
  }
  Player owner;
  if (header[1].text == "1") {
    owner = Player::One;
  } else if (header[1].text == "2") {
    owner = Player::Two;
  } else {
    fail(header[1], "player must be 1 or 2");
  }
  const std::size_t horizon = parse_count(header[3]);
  Strategy strategy(owner, horizon);
  const auto& part = game.observations(owner);
  std::set<ObsHistory> seen;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto& toks = lines[l];
    if (toks[0].text != "at") fail(toks[0], "expected 'at'");
    std::size_t i = 1;
    ObsHistory history;
    while (i < toks.size() && toks[i].text != "->") {
      auto block = part.find_label(toks[i].text);
      if (!block) fail(toks[i], "unknown observation '" + toks[i].text + "' for player " + header[1].text);
      history.push_back(*block);
      ++i;
    }
    if (i == toks.size()) fail(toks[0], "missing '->'");
    if (history.empty()) fail(toks[i], "empty observation history");
    if (history.size() > horizon) fail(toks[1], "history longer than the horizon");
    if (i + 1 == toks.size()) fail(toks[i], "no actions after '->'");
    ActionDistribution choice;
    Rational total;
    for (std::size_t k = i + 1; k < toks.size(); ++k) {
      auto [name, weight] = parse_weighted(toks[k]);
      auto a = game.find_action(owner, name);
      if (!a) fail(toks[k], "unknown action '" + name + "' for player " + header[1].text);
      if (weight.sign() <= 0) fail(toks[k], "non-positive weight " + weight.str());
      total += weight;
      choice.emplace_back(*a, weight);
    }
    if (total != Rational(1)) fail(toks[i + 1], "action weights sum to " + total.str() + " ≠ 1");
    if (!seen.insert(history).second) fail(toks[0], "duplicate history");
    strategy.set(std::move(history), std::move(choice));
  }
  return strategy;
}

std::string serialize_strategy(const Strategy& strategy, const Game& game) {
  std::ostringstream out;
  const Player owner = strategy.owner();
  out << "strategy " << static_cast<int>(owner) << " horizon " << strategy.horizon() << "\n";
  const auto& part = game.observations(owner);
  for (const auto& [history, choice] : strategy.table()) {
    out << "at";
    for (BlockId b : history) out << " " << part.label(b);
    out << " ->";
    if (choice.size() == 1) {
      out << " " << game.action_name(owner, choice[0].first);
    } else {
      for (const auto& [a, w] : choice) out << " " << game.action_name(owner, a) << ":" << w.str();
    }
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// witnesses

namespace {

const char* stutter_name(Stutter s) {
  switch (s) {
    case Stutter::None: return "none";
    case Stutter::Double: return "double";
    case Stutter::Probabilistic: return "probabilistic";
  }
  return "none";
}

}  // namespace

std::string serialize_witness(const ReductionWitness& w, const Game& original, const Game& reduced) {
  std::ostringstream out;
  out << "witness " << to_string(w.kind) << "\n";
  out << "n " << w.n << "\n";
  out << "stutter " << stutter_name(w.stutter) << "\n";
  out << "informed " << static_cast<int>(w.informed) << "\n";
  for (StateId s = 0; s < w.embedding.size(); ++s) {
    out << "embed " << original.state_name(s) << " " << reduced.state_name(w.embedding[s]) << "\n";
  }
  for (const auto& [r, src] : w.aux) out << "aux " << reduced.state_name(r) << " " << original.state_name(src) << "\n";
  for (StateId s = 0; s < w.probabilistic.size(); ++s) {
    if (w.probabilistic[s]) out << "prob " << original.state_name(s) << "\n";
  }
  for (const auto& [s, slots] : w.succ) {
    out << "succ " << original.state_name(s);
    for (StateId t : slots) out << " " << original.state_name(t);
    out << "\n";
  }
  if (w.sink) out << "sink " << reduced.state_name(*w.sink) << "\n";
  return out.str();
}

ReductionWitness parse_witness(std::string_view text, const Game& original, const Game& reduced) {
  const auto lines = tokenize_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty witness file");
  ReductionWitness w;
  w.original_states = original.num_states();
  w.reduced_states = reduced.num_states();
  w.embedding.assign(original.num_states(), reduced.num_states());
  std::vector<bool> prob(original.num_states(), false);
  auto lookup = [](const Game& g, const Token& t) {
    auto s = g.find_state(t.text);
    if (!s) fail(t, "unknown state '" + t.text + "'");
    return *s;
  };
  for (std::size_t l = 0; l < lines.size(); ++l) {
    const auto& toks = lines[l];
    const std::string& kw = toks[0].text;
    auto need = [&](std::size_t n) {
      if (toks.size() != n + 1) fail(toks[0], "'" + kw + "' takes " + std::to_string(n) + " arguments");
    };
    if (l == 0) {
      if (kw != "witness") fail(toks[0], "expected 'witness <kind>'");
      need(1);
      auto kind = parse_reduction_kind(toks[1].text);
      if (!kind) fail(toks[1], "unknown reduction '" + toks[1].text + "'");
      w.kind = *kind;
    } else if (kw == "n") {
      need(1);
      w.n = parse_count(toks[1]);
      if (w.n == 0) fail(toks[1], "n must be positive");
    } else if (kw == "stutter") {
      need(1);
      if (toks[1].text == "none") {
        w.stutter = Stutter::None;
      } else if (toks[1].text == "double") {
        w.stutter = Stutter::Double;
      } else if (toks[1].text == "probabilistic") {
        w.stutter = Stutter::Probabilistic;
      } else {
        fail(toks[1], "unknown stutter '" + toks[1].text + "'");
      }
    } else if (kw == "informed") {
      need(1);
      if (toks[1].text != "1" && toks[1].text != "2") fail(toks[1], "expected 1 or 2");
      w.informed = toks[1].text == "1" ? Player::One : Player::Two;
    } else if (kw == "embed") {
      need(2);
      w.embedding[lookup(original, toks[1])] = lookup(reduced, toks[2]);
    } else if (kw == "aux") {
      need(2);
      w.aux[lookup(reduced, toks[1])] = lookup(original, toks[2]);
    } else if (kw == "prob") {
      need(1);
      prob[lookup(original, toks[1])] = true;
    } else if (kw == "succ") {
      if (toks.size() < 3) fail(toks[0], "'succ' needs a state and its slots");
      std::vector<StateId> slots;
      for (std::size_t i = 2; i < toks.size(); ++i) slots.push_back(lookup(original, toks[i]));
      w.succ[lookup(original, toks[1])] = std::move(slots);
    } else if (kw == "sink") {
      need(1);
      w.sink = lookup(reduced, toks[1]);
    } else {
      fail(toks[0], "unknown keyword '" + kw + "'");
    }
  }
  for (StateId s = 0; s < original.num_states(); ++s) {
    if (w.embedding[s] >= reduced.num_states()) {
      throw Error(ErrorCode::IncompatibleWitness, "witness does not embed state '" + original.state_name(s) + "'");
    }
  }
  // Separation witnesses carry no probabilistic side.
  if (w.kind != ReductionKind::Separate) w.probabilistic = std::move(prob);
  return w;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out << contents;
}

}  // namespace rfg
