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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include "rfg/derandomize.hpp"
#include "rfg/evaluate.hpp"
#include "rfg/io.hpp"
#include "rfg/random.hpp"
#include "rfg/reductions.hpp"
#include "rfg/solvers.hpp"
#include "rfg/tables.hpp"
#include "rfg/verify.hpp"
#include "support.hpp"

using namespace rfg;

namespace {

constexpr double kValueGap = 1e-6;
constexpr double kSolverTol = 1e-9;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x, const char* spec = "%.3g") {
  char buf[48];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

int failures = 0;

void report(int n, bool pass, const std::string& what) {
  std::cout << "criterion " << n << ": " << (pass ? "PASS" : "FAIL") << " " << what << std::endl;
  if (!pass) ++failures;
}

template <class F>
void guarded(int n, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(n, false, std::string("exception: ") + e.what());
  }
}

Distribution slot_distribution(const ReductionWitness& w, StateId s) {
  Distribution d;
  const auto& slots = w.succ.at(s);
  for (StateId t : slots) d.add(w.embedding[t], Rational(1, static_cast<long>(slots.size())));
  return d;
}

/// Separated game whose probabilities all have denominator `d`.
Game separated_with_denominator(std::uint64_t seed, std::uint64_t t, long d) {
  auto rng = trial_rng(seed, t);
  RandomGameOptions o;
  o.denominators = {d};
  o.partial_observation = 0.5;
  return separate_interaction(random_game(rng, o)).game;
}

// 1 -------------------------------------------------------------------------

void latin_squares() {
  const auto t0 = Clock::now();
  std::size_t gadgets = 0, max_n = 0;
  bool ok = true;
  std::string first;
  for (std::uint64_t t = 0; t < 100; ++t) {
    const Game g = separated_with_denominator(101, t, 2 + static_cast<long>(t % 7));
    const Reduction u = uniformize(g);
    if (u.witness.n > 8) {
      ok = false;
      first = "arity above 8";
      continue;
    }
    const Reduction c = coc_gadget(u.game);
    const std::size_t n = c.witness.n;
    max_n = std::max(max_n, n);
    const auto names = gadget_action_names(n);
    for (const auto& [s, slots] : c.witness.succ) {
      ++gadgets;
      const StateId star = c.witness.embedding[s];
      std::map<StateId, std::size_t> want;
      for (StateId x : slots) ++want[c.witness.embedding[x]];
      const Distribution target = slot_distribution(c.witness, s);
      for (std::size_t i = 0; i < n; ++i) {
        std::map<StateId, std::size_t> row, col;
        for (std::size_t j = 0; j < n; ++j) {
          const ActionId ai = c.game.action(Player::One, names[i]), aj = c.game.action(Player::One, names[j]);
          const ActionId bi = c.game.action(Player::Two, names[i]), bj = c.game.action(Player::Two, names[j]);
          ++row[c.game.delta(star, ai, bj).entries()[0].first];
          ++col[c.game.delta(star, aj, bi).entries()[0].first];
        }
        if (row != want || col != want) {
          ok = false;
          if (first.empty()) first = "row/column is not a slot permutation at " + c.game.state_name(star);
        }
      }
      // Uniform play by one player against every action of the other.
      for (Player mixer : {Player::One, Player::Two}) {
        for (ActionId other = 0; other < c.game.num_actions(opponent(mixer)); ++other) {
          Distribution mix;
          for (const auto& g_name : names) {
            const ActionId mine = c.game.action(mixer, g_name);
            const Distribution& d =
                mixer == Player::One ? c.game.delta(star, mine, other) : c.game.delta(star, other, mine);
            for (const auto& [x, w] : d.entries()) mix.add(x, w * Rational(1, static_cast<long>(n)));
          }
          if (mix != target) {
            ok = false;
            if (first.empty()) first = "uniform play misses the slot distribution at " + c.game.state_name(star);
          }
        }
      }
    }
    if (!check_latin_squares(c.game, c.witness).empty() || !check_uniform_simulation(c.game, c.witness).empty()) {
      ok = false;
      if (first.empty()) first = "library check disagrees";
    }
  }
  const double secs = seconds_since(t0);
  report(1, ok && secs < 5.0 && gadgets > 0,
         "Latin-square gadgets: 100 games, " + std::to_string(gadgets) + " gadget states, n <= " +
             std::to_string(max_n) + ", exact; " + fmt(secs) + " s (limit 5 s)" + (first.empty() ? "" : "; " + first));
}

// 2 -------------------------------------------------------------------------

void value_preservation() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  std::size_t games = 0, tries = 0;
  while (games < 50 && tries < 10000) {
    auto rng = trial_rng(202, tries++);
    RandomGameOptions o;
    o.max_states = 5;
    o.denominators = {4};
    const Game g = random_game(rng, o);
    if (classify_game(g).interaction != Interaction::Concurrent) continue;
    ++games;
    const StateSet target{std::uniform_int_distribution<StateId>(0, g.num_states() - 1)(rng)};
    const Reduction s = separate_interaction(g);
    const Reduction u = uniformize(s.game);
    const Reduction c = coc_gadget(u.game);
    const StateSet lifted =
        std::get<Reach>(lift_objective(lift_objective(Reach{target}, s.witness), c.witness)).target;
    ShapleyOptions so;
    so.tolerance = kSolverTol;
    const ValueVector v0 = concurrent_reach_value(g, target, so);
    const ValueVector v1 = concurrent_reach_value(c.game, lifted, so);
    for (StateId x = 0; x < g.num_states(); ++x) {
      worst = std::max(worst, std::fabs(v0.at(x) - v1.at(c.witness.embedding[s.witness.embedding[x]])));
    }
  }
  const double secs = seconds_since(t0);
  report(2, games == 50 && worst <= kValueGap && secs < 60.0,
         "value preservation: " + std::to_string(games) + " concurrent games, max gap " + fmt(worst) +
             " (limit 1e-6, solver tol 1e-9); " + fmt(secs) + " s (limit 60 s)");
}

// 3 -------------------------------------------------------------------------

/// Uniform simulation at every probabilistic state of a turn-based gadget,
/// computed from the transition function.
bool turn_based_simulation(const Reduction& r, std::string& why) {
  const ReductionWitness& w = r.witness;
  const Player informed = w.informed, chooser = opponent(informed);
  const auto names = gadget_action_names(w.n);
  const Rational share(1, static_cast<long>(w.n));
  auto step = [&](StateId s, Player who, ActionId a) -> const Distribution& {
    return who == Player::One ? r.game.delta(s, a, 0) : r.game.delta(s, 0, a);
  };
  for (const auto& [s, slots] : w.succ) {
    const StateId here = w.embedding[s];
    const Distribution want = slot_distribution(w, s);
    std::vector<StateId> rows;
    for (const auto& n : names) rows.push_back(step(here, informed, r.game.action(informed, n)).entries()[0].first);
    for (StateId row : rows) {
      if (r.game.observation(chooser, row) != r.game.observation(chooser, rows[0])) {
        why = "row states are distinguishable";
        return false;
      }
    }
    // Chooser uniform against each pure row.
    for (StateId row : rows) {
      Distribution mix;
      for (const auto& n : names) {
        for (const auto& [x, p] : step(row, chooser, r.game.action(chooser, n)).entries()) mix.add(x, p * share);
      }
      if (mix != want) {
        why = "uniform column play fails at " + r.game.state_name(row);
        return false;
      }
    }
    // Informed player uniform against each pure column.
    for (const auto& n : names) {
      Distribution mix;
      for (StateId row : rows) {
        for (const auto& [x, p] : step(row, chooser, r.game.action(chooser, n)).entries()) mix.add(x, p * share);
      }
      if (mix != want) {
        why = "uniform row play fails against " + n;
        return false;
      }
    }
  }
  return true;
}

void simulation() {
  std::string why;
  const Reduction fixture = ost_gadget(testing::load_fixture("thirds.game").game);
  bool ok = fixture.witness.n == 3 && turn_based_simulation(fixture, why);
  std::size_t games = 0;
  for (std::uint64_t t = 0; t < 50 && ok; ++t) {
    const Game g = separated_with_denominator(303, t, 2 + static_cast<long>(t % 5));
    const Reduction r = ost_gadget(uniformize(g).game);
    ok = turn_based_simulation(r, why) && check_uniform_simulation(r.game, r.witness).empty();
    ++games;
  }
  report(3, ok,
         "turn-based gadget simulation: three-slot fixture and " + std::to_string(games) +
             " random games, each slot with probability exactly 1/n" + (why.empty() ? "" : "; " + why));
}

// 4 -------------------------------------------------------------------------

void strategy_pairs() {
  std::map<std::string, std::size_t> checked;
  bool ok = true;
  std::string first;
  const std::array<ReductionKind, 4> kinds = {ReductionKind::Separate, ReductionKind::Uniformize,
                                              ReductionKind::CocGadget, ReductionKind::OstGadget};
  for (ReductionKind kind : kinds) {
    for (std::uint64_t t = 0; t < 25; ++t) {
      auto rng = trial_rng(404 + static_cast<std::uint64_t>(kind), t);
      RandomGameOptions o;
      o.max_states = 4;
      o.denominators = {2, 4};
      o.partial_observation = 0.5;
      Game g = random_game(rng, o);
      if (kind != ReductionKind::Separate) g = separate_interaction(g).game;
      const StateId init = *g.initial();
      Reduction r;
      switch (kind) {
        case ReductionKind::Separate: r = separate_interaction(g); break;
        case ReductionKind::Uniformize: r = uniformize(g); break;
        case ReductionKind::CocGadget: r = coc_gadget(g); break;
        default: r = ost_gadget(g); break;
      }
      const std::size_t h = 1 + t % 4;
      const Strategy s1 = random_strategy(rng, g, init, Player::One, h);
      const Strategy s2 = random_strategy(rng, g, init, Player::Two, h);
      const BoundedReach obj{{std::uniform_int_distribution<StateId>(0, g.num_states() - 1)(rng)}, h};
      const Rational before = evaluate_fixed(g, init, &s1, &s2, obj);
      const auto p1 = translate_policy(s1, g, r.game, r.witness, init);
      const auto p2 = translate_policy(s2, g, r.game, r.witness, init);
      const auto lifted = std::get<BoundedReach>(lift_objective(obj, r.witness));
      const Rational after = evaluate_fixed(r.game, r.witness.embedding[init], p1.get(), p2.get(), lifted);
      ++checked[to_string(kind)];
      if (before != after) {
        ok = false;
        if (first.empty()) {
          first = std::string(to_string(kind)) + " trial " + std::to_string(t) + ": " + before.str() + " vs " +
                  after.str();
        }
      }
    }
  }
  std::string counts;
  for (const auto& [k, n] : checked) counts += " " + k + "=" + std::to_string(n);
  report(4, ok, "strategy pairs, horizon <= 4, exact equality:" + counts + (first.empty() ? "" : "; " + first));
}

// 5 -------------------------------------------------------------------------

void binary_tree() {
  const Game g = testing::load_fixture("coins.game").game;
  const Game b = naive_binary_reduction(g).game;
  auto beyond_two = [&](const std::string& from, std::vector<std::string> to) {
    return Rational(1) - evaluate_fixed(b, b.state(from), nullptr, nullptr, BoundedReach{make_state_set(b, to), 2});
  };
  const Rational thirds = beyond_two("s2", {"s2'", "s2''"});
  const Rational quarters = beyond_two("s1", {"s1'", "s1''"});
  report(5, thirds == Rational(1, 4) && quarters == Rational(0),
         "binary tree: P(more than 2 steps) is " + thirds.str() + " for (1/3, 2/3) (want 1/4) and " +
             quarters.str() + " for (1/4, 3/4) (want 0)");
}

// 6 -------------------------------------------------------------------------

void guessing_game() {
  const GameDocument doc = testing::load_fixture("guessing.game");
  const Game& g = doc.game;
  const StateId init = *g.initial();
  const StateSet target = std::get<Reach>(*doc.objective).target;
  bool ok = true;
  std::string detail;
  std::size_t strategies = 0;
  for (long k = 1; k <= 3; ++k) {
    const std::size_t h = static_cast<std::size_t>(3 * k + 1);
    const Strategy sigma =
        constant_strategy(g, init, Player::One, h, {{0, Rational(1, 2)}, {1, Rational(1, 2)}});
    // Player 2 only acts at s1; elsewhere the action is irrelevant.
    std::vector<ObsHistory> decisions, others;
    for (const auto& hist : reachable_histories(g, init, Player::Two, h)) {
      const std::string& last = g.observations(Player::Two).label(hist.back());
      (last == "s1" ? decisions : others).push_back(hist);
    }
    const Rational want = Rational(1) - Rational(1, 1L << k);
    for (std::uint64_t mask = 0; mask < (1ULL << decisions.size()); ++mask) {
      Strategy pi(Player::Two, h);
      for (std::size_t i = 0; i < decisions.size(); ++i) pi.set_pure(decisions[i], (mask >> i) & 1U);
      for (const auto& hist : others) pi.set_pure(hist, 0);
      ++strategies;
      const Rational got = evaluate_fixed(g, init, &sigma, &pi, BoundedReach{target, h});
      if (got != want) {
        ok = false;
        detail = "k=" + std::to_string(k) + " gives " + got.str();
        break;
      }
    }
  }
  report(6, ok,
         "guessing game: 1 - 2^-k at horizons 4, 7, 10 against all " + std::to_string(strategies) +
             " pure player-2 strategies" + (detail.empty() ? "" : "; " + detail));
}

// 7 -------------------------------------------------------------------------

RandomGameOptions pomdp_options() {
  RandomGameOptions o;
  o.max_states = 4;
  o.max_actions1 = 3;
  o.max_actions2 = 1;
  o.denominators = {2, 3, 4};
  o.partial_observation = 1.0;
  o.max_observations = 3;
  return o;
}

void integral_identity() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::size_t cells = 0;
  std::string first;
  for (std::uint64_t t = 0; t < 200; ++t) {
    auto rng = trial_rng(707, t);
    const Game g = random_game(rng, pomdp_options());
    const std::size_t h = 1 + t % 3;
    const Strategy sigma = random_strategy(rng, g, 0, Player::One, h);
    const BoundedReach obj{{std::uniform_int_distribution<StateId>(0, g.num_states() - 1)(rng)}, h};
    const IntegralIdentity id = verify_integral_identity(g, 0, sigma, obj);
    const BestPure best = best_pure(g, 0, sigma, obj);
    cells += id.decomposition.cells.size();
    if (!id.equal || best.value < id.lhs) {
      ok = false;
      if (first.empty()) first = "trial " + std::to_string(t) + ": lhs " + id.lhs.str() + " rhs " + id.rhs.str();
    }
  }
  const double secs = seconds_since(t0);
  report(7, ok && secs < 60.0,
         "integral identity: 200 POMDPs, " + std::to_string(cells) +
             " cells, lhs == rhs and best pure >= randomized, exact; " + fmt(secs) + " s (limit 60 s)" +
             (first.empty() ? "" : "; " + first));
}

// 8 -------------------------------------------------------------------------

void pure_dominance() {
  bool ok = true;
  std::size_t grid_points = 0;
  std::string first;
  for (std::uint64_t t = 0; t < 20; ++t) {
    auto rng = trial_rng(808, t);
    RandomGameOptions o = pomdp_options();
    o.max_actions1 = 2;
    o.min_states = 3;
    Game g = random_game(rng, o);
    while (g.num_actions(Player::One) != 2) g = random_game(rng, o);
    const std::size_t h = 2;
    const BoundedReach obj{{g.num_states() - 1}, h};
    Rational pure_max;
    for (const auto& p : testing::all_pure_strategies(g, 0, Player::One, h)) {
      pure_max = std::max(pure_max, evaluate_fixed(g, 0, &p, nullptr, obj));
    }
    // Five-point grid {0, 1/4, 1/2, 3/4, 1} for the weight of the first
    // action at every history.
    const auto hs = reachable_histories(g, 0, Player::One, h);
    const std::vector<ObsHistory> histories(hs.begin(), hs.end());
    std::vector<int> k(histories.size(), 0);
    Rational grid_max;
    for (;;) {
      Strategy sigma(Player::One, h);
      for (std::size_t i = 0; i < histories.size(); ++i) {
        ActionDistribution d;
        if (k[i] > 0) d.emplace_back(0, Rational(k[i], 4));
        if (k[i] < 4) d.emplace_back(1, Rational(4 - k[i], 4));
        sigma.set(histories[i], d);
      }
      ++grid_points;
      const Rational v = evaluate_fixed(g, 0, &sigma, nullptr, obj);
      grid_max = std::max(grid_max, v);
      const BestPure best = best_pure(g, 0, sigma, obj);
      if (best.value > pure_max || best.value < v) {
        ok = false;
        if (first.empty()) first = "best pure outside [value, pure max] in game " + std::to_string(t);
      }
      std::size_t i = 0;
      while (i < k.size() && ++k[i] == 5) k[i++] = 0;
      if (i == k.size()) break;
    }
    if (grid_max != pure_max) {
      ok = false;
      if (first.empty()) first = "grid max " + grid_max.str() + " != pure max " + pure_max.str();
    }
  }
  report(8, ok,
         "pure dominance at horizon 2: 20 POMDPs, " + std::to_string(grid_points) +
             " grid strategies, grid max == pure max" + (first.empty() ? "" : "; " + first));
}

// 9 -------------------------------------------------------------------------

void tables() {
  const std::array<std::pair<ObservationClass, PlayerCount>, 5> cols = {{
      {ObservationClass::Co, PlayerCount::TwoAndHalf},
      {ObservationClass::Os2, PlayerCount::TwoAndHalf},
      {ObservationClass::Pa, PlayerCount::TwoAndHalf},
      {ObservationClass::Co, PlayerCount::OneAndHalf},
      {ObservationClass::Pa, PlayerCount::OneAndHalf},
  }};
  const std::array<std::array<const char*, 5>, 4> want = {{
      {"not", "free", "free", "not", "not"},
      {"free", "free", "free", "(NA)", "(NA)"},
      {"ε > 0", "not", "not", "ε ≥ 0", "ε ≥ 0"},
      {"not", "not", "not", "(NA)", "(NA)"},
  }};
  std::size_t matched = 0;
  for (std::size_t r = 0; r < 4; ++r) {
    const TableAxis axis = r < 2 ? TableAxis::Transitions : TableAxis::Strategies;
    const Interaction row = r % 2 == 0 ? Interaction::TurnBased : Interaction::Concurrent;
    for (std::size_t c = 0; c < 5; ++c) {
      const auto entry = randomness_tables(axis, GameClass{cols[c].first, row, cols[c].second});
      if (cell_text(axis, entry.verdict) == want[r][c]) ++matched;
    }
  }
  report(9, matched == 20, "classification tables: " + std::to_string(matched) + "/20 cells match");
}

// 10 ------------------------------------------------------------------------

std::string run(const std::string& cmd, int& status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  status = pclose(p);
  return out;
}

void round_trip_and_determinism() {
  std::size_t identical = 0;
  const auto corpus = testing::corpus();
  for (const auto& name : corpus) {
    const std::string text = read_file(testing::fixture_path(name));
    const GameDocument doc = parse_game_document(text);
    if (serialize_game(doc.game, doc.objective) == text) ++identical;
  }
  const std::string cmd = std::string(RFGAME_PATH) + " verify --reduction coc --trials 50 --seed 42";
  int s1 = 0, s2 = 0;
  const std::string a = run(cmd, s1);
  const std::string b = run(cmd, s2);
  const bool deterministic = !a.empty() && a == b;
  const bool passed = s1 == 0 && a.find("\nPASS (50/50 trials)\n") != std::string::npos;
  report(10, identical == corpus.size() && deterministic && passed,
         "round trip " + std::to_string(identical) + "/" + std::to_string(corpus.size()) +
             " fixtures byte-exact; verify --seed 42 " + (deterministic ? "byte-identical" : "differs") +
             " across two runs (" + std::to_string(a.size()) + " bytes)" + (passed ? ", PASS" : ", not PASS"));
}

}  // namespace

int main() {
  guarded(1, latin_squares);
  guarded(2, value_preservation);
  guarded(3, simulation);
  guarded(4, strategy_pairs);
  guarded(5, binary_tree);
  guarded(6, guessing_game);
  guarded(7, integral_identity);
  guarded(8, pure_dominance);
  guarded(9, tables);
  guarded(10, round_trip_and_determinism);
  std::cout << (failures == 0 ? "all criteria PASS" : std::to_string(failures) + " criteria FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
