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

#include <doctest.h>

#include <set>

#include "rfg/derandomize.hpp"
#include "rfg/error.hpp"
#include "rfg/random.hpp"
#include "support.hpp"

using namespace rfg;

namespace {

RandomGameOptions pomdp_options() {
  RandomGameOptions o;
  o.max_states = 4;
  o.max_actions2 = 1;
  o.denominators = {2, 3};
  o.partial_observation = 1.0;
  o.allow_concurrent = false;
  return o;
}

// First action whose cumulative weight reaches x.
ActionId oracle_pick(const ActionDistribution& d, const Rational& x) {
  Rational acc;
  for (const auto& [a, w] : d) {
    acc += w;
    if (acc >= x) return a;
  }
  return d.back().first;
}

}  // namespace

TEST_CASE("coin fixing picks the first action whose cumulative weight reaches the coin") {
  Strategy s(Player::One, 1);
  s.set({0}, {{0, Rational(1, 3)}, {1, Rational(2, 3)}});
  auto at = [&](Rational x) { return *sigma_x(s, std::vector<Rational>{x}).choose(std::vector<BlockId>{0}); };
  CHECK(at(Rational(0)) == pure_choice(0));
  CHECK(at(Rational(1, 3)) == pure_choice(0));
  CHECK(at(Rational(1, 2)) == pure_choice(1));
  CHECK(at(Rational(1)) == pure_choice(1));
  CHECK_THROWS_AS(sigma_x(s, std::vector<Rational>{Rational(3, 2)}), Error);
  CHECK_THROWS_AS(sigma_x(s, std::vector<Rational>{}), Error);
}

TEST_CASE("cells are pure, distinct and carry the whole coin measure") {
  for (std::uint64_t t = 0; t < 60; ++t) {
    auto rng = trial_rng(40, t);
    const Game g = random_game(rng, pomdp_options());
    const Strategy sigma = random_strategy(rng, g, 0, Player::One, 1 + t % 3);
    const CellDecomposition d = threshold_refinement(sigma, g, 0);
    CHECK(d.total_weight() == Rational(1));
    std::set<std::map<ObsHistory, ActionDistribution>> seen;
    for (const auto& c : d.cells) {
      CHECK(c.pure.is_pure());
      CHECK(c.weight > Rational(0));
      CHECK(seen.insert(c.pure.table()).second);
    }
  }
}

TEST_CASE("the identity matches a grid integral of coin-fixed values") {
  for (std::uint64_t t = 0; t < 40; ++t) {
    auto rng = trial_rng(41, t);
    const Game g = random_game(rng, pomdp_options());
    const std::size_t h = 1 + t % 2;
    RandomStrategyOptions so;
    so.denominators = {2, 3};
    const Strategy sigma = random_strategy(rng, g, 0, Player::One, h, so);
    const StateSet target{g.num_states() - 1};
    const BoundedReach obj{target, h};
    const IntegralIdentity id = verify_integral_identity(g, 0, sigma, obj);
    CHECK(id.equal);
    CHECK(id.lhs == testing::oracle_reach(g, 0, &sigma, nullptr, target, h));

    // Every threshold is a multiple of 1/6, so midpoints of a 1/6 grid see
    // each coin-fixed strategy with its exact measure.
    const long grid = 6;
    Rational integral;
    std::vector<long> k(h, 0);
    for (;;) {
      Strategy fixed(Player::One, h);
      for (const auto& [hist, d] : sigma.table()) {
        fixed.set_pure(hist, oracle_pick(d, Rational(2 * k[hist.size() - 1] + 1, 2 * grid)));
      }
      Rational cell(1);
      for (std::size_t i = 0; i < h; ++i) cell *= Rational(1, grid);
      integral += cell * testing::oracle_reach(g, 0, &fixed, nullptr, target, h);
      std::size_t i = 0;
      while (i < h && ++k[i] == grid) k[i++] = 0;
      if (i == h) break;
    }
    CHECK(integral == id.lhs);
    CHECK(integral == id.rhs);
  }
}

TEST_CASE("the best pure cell is at least the randomized value and at most the pure optimum") {
  for (std::uint64_t t = 0; t < 30; ++t) {
    auto rng = trial_rng(42, t);
    const Game g = random_game(rng, pomdp_options());
    const std::size_t h = 2;
    const Strategy sigma = random_strategy(rng, g, 0, Player::One, h);
    const StateSet target{g.num_states() - 1};
    const BestPure best = best_pure(g, 0, sigma, BoundedReach{target, h});
    CHECK(best.strategy.is_pure());
    CHECK(best.value == testing::oracle_reach(g, 0, &best.strategy, nullptr, target, h));
    CHECK(best.value >= testing::oracle_reach(g, 0, &sigma, nullptr, target, h));
    Rational top;
    for (const auto& p : testing::all_pure_strategies(g, 0, Player::One, h)) {
      top = std::max(top, testing::oracle_reach(g, 0, &p, nullptr, target, h));
    }
    CHECK(best.value <= top);
  }
}

TEST_CASE("derandomization checks its preconditions") {
  const Game pennies = testing::load_fixture("pennies.game").game;
  const Strategy s = constant_strategy(pennies, 0, Player::One, 1, pure_choice(0));
  try {
    verify_integral_identity(pennies, 0, s, BoundedReach{{0}, 1});
    FAIL("expected NotPomdp");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPomdp);
  }
  // With the opponent fixed the game is a POMDP again.
  const Strategy o = constant_strategy(pennies, 0, Player::Two, 1, pure_choice(1));
  CHECK(verify_integral_identity(pennies, 0, s, BoundedReach{{pennies.state("win")}, 1}, &o).equal);
  const Game pomdp = testing::load_fixture("pomdp.game").game;
  const Strategy short_one = constant_strategy(pomdp, 0, Player::One, 1, pure_choice(0));
  try {
    verify_integral_identity(pomdp, 0, short_one, BoundedReach{{0}, 3});
    FAIL("expected HorizonMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HorizonMismatch);
  }
}
