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

#include <cmath>

#include "rfg/error.hpp"
#include "rfg/matrix_game.hpp"
#include "rfg/random.hpp"
#include "rfg/reductions.hpp"
#include "rfg/solvers.hpp"
#include "support.hpp"

using namespace rfg;

namespace {

// An optimal pair certifies itself: the row strategy earns at least the
// value against every column and the column strategy concedes at most it.
template <class T>
void check_certificate(const Matrix<T>& m, const MatrixGameSolution<T>& sol, const T& eps) {
  T psum{}, qsum{};
  for (const auto& x : sol.row) {
    CHECK(x >= -eps);
    psum += x;
  }
  for (const auto& x : sol.col) {
    CHECK(x >= -eps);
    qsum += x;
  }
  CHECK(psum - T(1) <= eps);
  CHECK(T(1) - psum <= eps);
  CHECK(qsum - T(1) <= eps);
  CHECK(T(1) - qsum <= eps);
  for (std::size_t c = 0; c < m[0].size(); ++c) {
    T earned{};
    for (std::size_t r = 0; r < m.size(); ++r) earned += sol.row[r] * m[r][c];
    CHECK(earned >= sol.value - eps);
  }
  for (std::size_t r = 0; r < m.size(); ++r) {
    T conceded{};
    for (std::size_t c = 0; c < m[0].size(); ++c) conceded += m[r][c] * sol.col[c];
    CHECK(conceded <= sol.value + eps);
  }
}

Matrix<Rational> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<long> entry(-6, 6);
  Matrix<Rational> m(rows, std::vector<Rational>(cols));
  for (auto& row : m) {
    for (auto& x : row) x = Rational(entry(rng), 3);
  }
  return m;
}

}  // namespace

TEST_CASE("matching pennies has value zero with uniform play") {
  const Matrix<Rational> m = {{1, -1}, {-1, 1}};
  const auto sol = matrix_game_value(m);
  CHECK(sol.value == Rational(0));
  CHECK(sol.row == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("2x2 games without a saddle point match the closed form") {
  std::mt19937_64 rng(2);
  int checked = 0;
  while (checked < 200) {
    const auto m = random_matrix(rng, 2, 2);
    const Rational a = m[0][0], b = m[0][1], c = m[1][0], d = m[1][1];
    // No saddle point when the diagonals strictly alternate.
    const bool mixed = (a > b && d > c && a > c && d > b) || (a < b && d < c && a < c && d < b);
    if (!mixed) continue;
    ++checked;
    CHECK(matrix_game_value(m).value == (a * d - b * c) / (a + d - b - c));
  }
}

TEST_CASE("exact solutions certify themselves on kernel-sized and larger matrices") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 150; ++i) {
    const std::size_t rows = 1 + i % 8, cols = 1 + (i / 8) % 8;
    const auto m = random_matrix(rng, rows, cols);
    check_certificate(m, matrix_game_value(m), Rational(0));
  }
}

TEST_CASE("floating solutions agree with exact ones") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const std::size_t rows = 1 + i % 7, cols = 1 + (i / 7) % 7;
    const auto m = random_matrix(rng, rows, cols);
    Matrix<double> d(rows, std::vector<double>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) d[r][c] = m[r][c].to_double();
    }
    const auto approx = matrix_game_value(d);
    CHECK(std::fabs(approx.value - matrix_game_value(m).value.to_double()) < 1e-9);
    check_certificate(d, approx, 1e-9);
  }
}

TEST_CASE("matching-pennies reachability has value one half") {
  const GameDocument doc = testing::load_fixture("pennies.game");
  const StateSet t = std::get<Reach>(*doc.objective).target;
  const ValueVector v = concurrent_reach_value(doc.game, t);
  CHECK(std::fabs(v.at(doc.game.state("s")) - 0.5) < 1e-9);
  CHECK(v.at(doc.game.state("win")) == 1.0);
  CHECK(v.at(doc.game.state("miss")) == 0.0);
}

TEST_CASE("value iteration is monotone and bounded by one") {
  for (std::uint64_t t = 0; t < 30; ++t) {
    auto rng = trial_rng(8, t);
    RandomGameOptions o;
    const Game g = random_game(rng, o);
    ShapleyOptions so;
    std::vector<double> last(g.num_states(), 0.0);
    bool ok = true;
    so.observer = [&](std::size_t, const std::vector<double>& v) {
      for (std::size_t s = 0; s < v.size(); ++s) {
        ok = ok && v[s] >= last[s] - 1e-12 && v[s] <= 1.0;
      }
      last = v;
    };
    concurrent_reach_value(g, {0}, so);
    CHECK(ok);
  }
}

TEST_CASE("reach values need complete observation and a target") {
  const Game hide = testing::load_fixture("hide.game").game;
  CHECK_THROWS_AS(concurrent_reach_value(hide, {0}), Error);
  const Game pennies = testing::load_fixture("pennies.game").game;
  CHECK_THROWS_AS(concurrent_reach_value(pennies, {}), Error);
}

TEST_CASE("exact MDP values on the fixture") {
  const GameDocument doc = testing::load_fixture("mdp.game");
  const MdpSolution sol = mdp_reach_value(doc.game, std::get<Reach>(*doc.objective).target);
  CHECK(sol.controller == Player::One);
  CHECK(sol.values.exact[doc.game.state("s0")] == Rational(3, 4));
  CHECK(sol.values.exact[doc.game.state("s1")] == Rational(3, 4));
  CHECK(sol.values.exact[doc.game.state("fail")] == Rational(0));
}

TEST_CASE("exact MDP values agree with floating value iteration") {
  for (std::uint64_t t = 0; t < 80; ++t) {
    auto rng = trial_rng(9, t);
    RandomGameOptions o;
    o.max_states = 6;
    o.denominators = {2, 3, 4};
    if (t % 2 == 0) {
      o.max_actions2 = 1;
    } else {
      o.max_actions1 = 1;
    }
    const Game g = random_game(rng, o);
    if (classify_game(g).players != PlayerCount::OneAndHalf) continue;
    const StateSet target{g.num_states() - 1};
    const MdpSolution sol = mdp_reach_value(g, target);
    const Player c = sol.controller;
    const auto oracle = testing::oracle_mdp_values(g, c, target, c == Player::One);
    for (StateId s = 0; s < g.num_states(); ++s) CHECK(std::fabs(sol.values.exact[s].to_double() - oracle[s]) < 1e-6);
    // Almost-sure reachability is value one, for either controller.
    const StateSet sure = mdp_almost_sure(g, Reach{target});
    for (StateId s = 0; s < g.num_states(); ++s) CHECK(contains(sure, s) == (sol.values.exact[s] == Rational(1)));
  }
  // Both players have two actions here.
  CHECK_THROWS_AS(mdp_controller(testing::load_fixture("pennies.game").game), Error);
}

TEST_CASE("almost-sure Buechi needs an end component through the target") {
  GameBuilder b("buchi");
  b.actions(Player::One, {"go", "stay"}).actions(Player::Two, {"z"});
  b.state("a").state("b").state("c");
  // a -> b or a; b -> a; c is a trap that avoids the target b.
  b.transition("a", "go", "z", {{"b", Rational(1)}});
  b.transition("a", "stay", "z", {{"c", Rational(1, 2)}, {"a", Rational(1, 2)}});
  b.transition("b", "-", "-", {{"a", Rational(1)}});
  b.transition("c", "-", "-", {{"c", Rational(1)}});
  b.full_observation(Player::One).full_observation(Player::Two);
  const Game g = b.build();
  const StateSet win = mdp_almost_sure(g, Buechi{{g.state("b")}});
  CHECK(win == StateSet{g.state("a"), g.state("b")});
  const auto mecs = maximal_end_components(g);
  CHECK(std::find(mecs.begin(), mecs.end(), StateSet{g.state("a"), g.state("b")}) != mecs.end());
  CHECK(std::find(mecs.begin(), mecs.end(), StateSet{g.state("c")}) != mecs.end());
}

TEST_CASE("values survive separation on complete-observation games") {
  for (std::uint64_t t = 0; t < 25; ++t) {
    auto rng = trial_rng(12, t);
    RandomGameOptions o;
    const Game g = random_game(rng, o);
    const Reduction r = separate_interaction(g);
    const StateSet t0{0};
    const auto lifted = std::get<Reach>(lift_objective(Reach{t0}, r.witness)).target;
    const ValueVector a = concurrent_reach_value(g, t0);
    const ValueVector b = concurrent_reach_value(r.game, lifted);
    for (StateId s = 0; s < g.num_states(); ++s) CHECK(std::fabs(a.at(s) - b.at(r.witness.embedding[s])) < 1e-6);
  }
}
