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

#include "rfg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "rfg/error.hpp"
#include "rfg/evaluate.hpp"
#include "rfg/io.hpp"
#include "rfg/random.hpp"
#include "rfg/solvers.hpp"

namespace rfg {

namespace {

std::vector<ActionId> gadget_ids(const Game& g, Player p, std::size_t n) {
  std::vector<ActionId> ids;
  for (const auto& name : gadget_action_names(n)) ids.push_back(g.action(p, name));
  return ids;
}

Distribution uniform_over_slots(const std::vector<StateId>& slots, const ReductionWitness& w) {
  Distribution d;
  const Rational share(1, static_cast<long>(slots.size()));
  for (StateId t : slots) d.add(w.embedding[t], share);
  return d;
}

/// Mixture of the given distributions with equal weights.
Distribution average(const std::vector<const Distribution*>& parts) {
  Distribution d;
  const Rational share(1, static_cast<long>(parts.size()));
  for (const Distribution* p : parts) {
    for (const auto& [t, w] : p->entries()) d.add(t, w * share);
  }
  return d;
}

const Distribution& delta_for(const Game& g, StateId s, Player p, ActionId mine, ActionId theirs) {
  return p == Player::One ? g.delta(s, mine, theirs) : g.delta(s, theirs, mine);
}

}  // namespace

std::vector<std::string> check_latin_squares(const Game& reduced, const ReductionWitness& w) {
  std::vector<std::string> failures;
  if (w.kind != ReductionKind::CocGadget) return {"witness is not a concurrent gadget witness"};
  const auto g1 = gadget_ids(reduced, Player::One, w.n);
  const auto g2 = gadget_ids(reduced, Player::Two, w.n);
  for (const auto& [s, slots] : w.succ) {
    const StateId star = w.embedding[s];
    std::vector<StateId> expected;
    for (StateId t : slots) expected.push_back(w.embedding[t]);
    std::sort(expected.begin(), expected.end());
    for (std::size_t line = 0; line < w.n; ++line) {
      std::vector<StateId> row, col;
      for (std::size_t k = 0; k < w.n; ++k) {
        const Distribution& r = reduced.delta(star, g1[line], g2[k]);
        const Distribution& c = reduced.delta(star, g1[k], g2[line]);
        if (!r.is_point_mass() || !c.is_point_mass()) {
          failures.push_back(reduced.state_name(star) + ": gadget entry is not deterministic");
          return failures;
        }
        row.push_back(r.entries()[0].first);
        col.push_back(c.entries()[0].first);
      }
      std::sort(row.begin(), row.end());
      std::sort(col.begin(), col.end());
      if (row != expected) failures.push_back(reduced.state_name(star) + ": row " + std::to_string(line) + " is not a permutation of the slots");
      if (col != expected) failures.push_back(reduced.state_name(star) + ": column " + std::to_string(line) + " is not a permutation of the slots");
    }
  }
  return failures;
}

std::vector<std::string> check_uniform_simulation(const Game& reduced, const ReductionWitness& w) {
  std::vector<std::string> failures;
  if (w.kind == ReductionKind::CocGadget) {
    for (const auto& [s, slots] : w.succ) {
      const StateId star = w.embedding[s];
      const Distribution expected = uniform_over_slots(slots, w);
      for (Player mixer : {Player::One, Player::Two}) {
        const auto mine = gadget_ids(reduced, mixer, w.n);
        for (ActionId other = 0; other < reduced.num_actions(opponent(mixer)); ++other) {
          std::vector<const Distribution*> parts;
          for (ActionId g : mine) parts.push_back(&delta_for(reduced, star, mixer, g, other));
          if (average(parts) != expected) {
            failures.push_back(reduced.state_name(star) + ": uniform play by player " +
                               std::to_string(static_cast<int>(mixer)) + " against " +
                               reduced.action_name(opponent(mixer), other) + " misses the slot distribution");
          }
        }
      }
    }
    return failures;
  }
  if (w.kind != ReductionKind::OstGadget) return {"witness is not a gadget witness"};
  const Player informed = w.informed;
  const Player chooser = opponent(informed);
  const auto gi = gadget_ids(reduced, informed, w.n);
  const auto gj = gadget_ids(reduced, chooser, w.n);
  for (const auto& [s, slots] : w.succ) {
    const StateId here = w.embedding[s];
    const Distribution expected = uniform_over_slots(slots, w);
    std::vector<StateId> rows;
    for (ActionId g : gi) {
      const Distribution& d = delta_for(reduced, here, informed, g, 0);
      if (!d.is_point_mass()) return {reduced.state_name(here) + ": row choice is not deterministic"};
      rows.push_back(d.entries()[0].first);
    }
    // The chooser mixes uniformly against every row.
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::vector<const Distribution*> parts;
      for (ActionId g : gj) parts.push_back(&delta_for(reduced, rows[i], chooser, g, 0));
      if (average(parts) != expected) {
        failures.push_back(reduced.state_name(rows[i]) + ": uniform column choice misses the slot distribution");
      }
    }
    // The informed player mixes uniformly; the chooser cannot tell the rows
    // apart, so a pure choice is one column for all of them.
    for (ActionId g : gj) {
      std::vector<const Distribution*> parts;
      for (StateId r : rows) parts.push_back(&delta_for(reduced, r, chooser, g, 0));
      if (average(parts) != expected) {
        failures.push_back(reduced.state_name(here) + ": uniform row choice against column " +
                           reduced.action_name(chooser, g) + " misses the slot distribution");
      }
    }
  }
  return failures;
}

bool VerifyReport::pass() const {
  return std::all_of(trials.begin(), trials.end(), [](const TrialReport& t) { return t.pass; });
}

std::string VerifyReport::render() const {
  std::ostringstream out;
  std::size_t passed = 0;
  const TrialReport* first_failure = nullptr;
  for (const auto& t : trials) {
    out << "trial " << t.index << ": " << (t.pass ? "PASS" : "FAIL") << " " << t.summary << "\n";
    if (t.pass) {
      ++passed;
    } else if (first_failure == nullptr) {
      first_failure = &t;
    }
  }
  out << (pass() ? "PASS" : "FAIL") << " (" << passed << "/" << trials.size() << " trials)\n";
  if (first_failure != nullptr) {
    out << "first counterexample: trial " << first_failure->index << ": " << first_failure->failure << "\n";
    out << first_failure->counterexample;
  }
  return out.str();
}

namespace {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

struct Chain {
  std::vector<Reduction> steps;
  const Game& last(const Game& original) const { return steps.empty() ? original : steps.back().game; }
};

StateId through(const Chain& chain, StateId s) {
  for (const auto& step : chain.steps) s = step.witness.embedding[s];
  return s;
}

Objective lift_through(const Chain& chain, Objective o) {
  for (const auto& step : chain.steps) o = lift_objective(o, step.witness);
  return o;
}

void run_trial(const VerifyOptions& options, TrialReport& report) {
  auto rng = trial_rng(options.seed, report.index);
  RandomGameOptions go;
  go.max_states = std::max<std::size_t>(options.max_states, 2);
  go.denominators = {4, 6};
  go.partial_observation = 0.5;
  const Game game = random_game(rng, go);
  const StateId init = *game.initial();
  StateSet target = make_state_set({std::uniform_int_distribution<StateId>(0, game.num_states() - 1)(rng)});
  report.counterexample = serialize_game(game, Objective{Reach{target}});

  std::vector<std::string> failures;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };

  Chain chain;
  chain.steps.push_back(separate_interaction(game));
  if (options.kind == ReductionKind::CocGadget) {
    Reduction u = uniformize(chain.steps.back().game);
    chain.steps.push_back(coc_gadget(u.game));
  } else if (options.kind == ReductionKind::OstGadget) {
    chain.steps.push_back(ost_gadget(chain.steps.back().game));
  }
  const Game& reduced = chain.last(game);
  const ReductionWitness& last = chain.steps.back().witness;

  const GameClass before = classify_game(game);
  const GameClass after = classify_game(reduced);
  check(validate(reduced).ok(), "reduced game is invalid");
  if (options.kind == ReductionKind::Separate) {
    check(validate(reduced).interaction_separated, "separated game fails the separation check");
    check(after.observation == before.observation, "observation class changed");
  }
  if (before.interaction == Interaction::TurnBased && options.kind != ReductionKind::CocGadget) {
    check(after.interaction == Interaction::TurnBased, "turn-based game became concurrent");
  }
  if (options.kind == ReductionKind::CocGadget) {
    for (const auto& f : check_latin_squares(reduced, last)) check(false, f);
  }
  if (options.kind != ReductionKind::Separate) {
    for (const auto& f : check_uniform_simulation(reduced, last)) check(false, f);
  }

  std::string gap_text = "-";
  if (before.observation == ObservationClass::Co && options.kind != ReductionKind::OstGadget) {
    ShapleyOptions so;
    so.tolerance = options.solver_tolerance;
    const ValueVector v0 = concurrent_reach_value(game, target, so);
    const StateSet lifted = std::get<Reach>(lift_through(chain, Objective{Reach{target}})).target;
    const ValueVector v1 = concurrent_reach_value(reduced, lifted, so);
    double gap = 0.0;
    for (StateId s = 0; s < game.num_states(); ++s) gap = std::max(gap, std::fabs(v0.at(s) - v1.at(through(chain, s))));
    gap_text = format_double(gap);
    check(gap <= options.tolerance, "value gap " + gap_text + " exceeds " + format_double(options.tolerance));
  }

  const std::size_t pairs = 2;
  for (std::size_t k = 0; k < pairs; ++k) {
    const std::size_t h = std::uniform_int_distribution<std::size_t>(1, options.max_horizon)(rng);
    const Strategy sigma = random_strategy(rng, game, init, Player::One, h);
    const Strategy pi = random_strategy(rng, game, init, Player::Two, h);
    const BoundedReach objective{target, h};
    const Rational original = evaluate_fixed(game, init, &sigma, &pi, objective);
    std::vector<std::unique_ptr<Policy>> p1, p2;
    const Game* from = &game;
    StateId at = init;
    for (const auto& step : chain.steps) {
      p1.push_back(translate_policy(p1.empty() ? static_cast<const Policy&>(sigma) : *p1.back(), *from, step.game,
                                    step.witness, at));
      p2.push_back(translate_policy(p2.empty() ? static_cast<const Policy&>(pi) : *p2.back(), *from, step.game,
                                    step.witness, at));
      at = step.witness.embedding[at];
      from = &step.game;
    }
    const auto lifted = std::get<BoundedReach>(lift_through(chain, Objective{objective}));
    const Rational translated = evaluate_fixed(reduced, at, p1.back().get(), p2.back().get(), lifted);
    check(original == translated, "strategy pair at horizon " + std::to_string(h) + ": " + original.str() +
                                      " on the original, " + translated.str() + " on the reduction");
  }

  report.pass = failures.empty();
  if (!failures.empty()) report.failure = failures.front();
  report.summary = "states=" + std::to_string(game.num_states()) + " class=" + to_string(before) +
                   " n=" + std::to_string(last.n) + " reduced=" + std::to_string(reduced.num_states()) +
                   " gap=" + gap_text + " pairs=" + std::to_string(pairs);
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.kind == ReductionKind::Uniformize || options.kind == ReductionKind::NaiveBinary) {
    throw Error(ErrorCode::InvalidArgument, "verify covers separate, coc and ost");
  }
  VerifyReport report;
  for (std::size_t t = 0; t < options.trials; ++t) {
    TrialReport trial;
    trial.index = t;
    try {
      run_trial(options, trial);
    } catch (const Error& e) {
      trial.pass = false;
      trial.failure = std::string(to_string(e.code())) + ": " + e.what();
      trial.summary = "error";
    }
    report.trials.push_back(std::move(trial));
  }
  return report;
}

}  // namespace rfg
