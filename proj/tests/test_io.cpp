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

#include <array>

#include "rfg/error.hpp"
#include "rfg/random.hpp"
#include "rfg/reductions.hpp"
#include "rfg/tables.hpp"
#include "support.hpp"

using namespace rfg;

namespace {

const std::string kHeader =
    "game g\nactions1 x\nactions2 y\nobs1 full\nobs2 full\nstate s1 prob\ntrans -> s1\nstate s2 prob\n";

ParseError parse_error(const std::string& text) {
  try {
    parse_game(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("the fixture corpus is canonical") {
  for (const auto& name : testing::corpus()) {
    CAPTURE(name);
    const std::string text = read_file(testing::fixture_path(name));
    const GameDocument doc = parse_game_document(text);
    CHECK(serialize_game(doc.game, doc.objective) == text);
  }
}

TEST_CASE("short forms and comments canonicalize to the fixture") {
  const GameDocument loose = parse_game_document(read_file(testing::input_path("guessing_short.game")));
  CHECK(serialize_game(loose.game, loose.objective) == read_file(testing::fixture_path("guessing.game")));
}

TEST_CASE("serialize then parse is the identity on random games") {
  for (std::uint64_t t = 0; t < 100; ++t) {
    auto rng = trial_rng(50, t);
    RandomGameOptions o;
    o.partial_observation = 0.5;
    o.denominators = {4, 6};
    const Game g = random_game(rng, o);
    const std::string text = serialize_game(g);
    CHECK(parse_game(text) == g);
    CHECK(serialize_game(parse_game(text)) == text);
  }
}

TEST_CASE("a game without an objective has no objective line") {
  const GameDocument doc = testing::load_fixture("thirds.game");
  CHECK_FALSE(doc.objective.has_value());
  CHECK(serialize_game(doc.game).find("objective") == std::string::npos);
}

TEST_CASE("weights that do not sum to one are located") {
  const std::string text = kHeader + "trans -> s1:1/2 s2:1/3\n";
  const ParseError e = parse_error(text);
  CHECK(std::string(e.what()).find("weights sum to 5/6 ≠ 1 at line 9") != std::string::npos);
  CHECK(e.line() == 9);
}

TEST_CASE("unknown identifiers and bad syntax are located") {
  const ParseError unknown = parse_error(kHeader + "trans -> s3\n");
  CHECK(unknown.line() == 9);
  CHECK(unknown.column() == 10);
  CHECK(std::string(unknown.what()).find("unknown state 's3'") != std::string::npos);
  const ParseError action = parse_error(
      "game g\nactions1 x\nactions2 y\nobs1 full\nobs2 full\nstate s p1\ntrans z -> s\n");
  CHECK(action.line() == 7);
  CHECK(std::string(action.what()).find("unknown action 'z'") != std::string::npos);
  CHECK(parse_error(kHeader + "trans -> s1:x\n").line() == 9);
  CHECK(parse_error("bogus line\n").line() == 1);
}

TEST_CASE("missing transitions are reported unless validation is off") {
  const std::string text = "game g\nactions1 x w\nactions2 y\nobs1 full\nobs2 full\nstate s p1\ntrans x -> s\n";
  CHECK(parse_error(text).line() == 6);
  ParseOptions lenient;
  lenient.validate = false;
  const GameDocument doc = parse_game_document(text, lenient);
  CHECK_FALSE(validate(doc.game).ok());
}

TEST_CASE("strategies round-trip") {
  const Game g = testing::load_fixture("guessing.game").game;
  for (std::uint64_t t = 0; t < 30; ++t) {
    auto rng = trial_rng(51, t);
    RandomStrategyOptions o;
    o.pure = t % 2 == 0;
    const Strategy s = random_strategy(rng, g, g.state("s1"), t % 3 == 0 ? Player::Two : Player::One, 1 + t % 4, o);
    const std::string text = serialize_strategy(s, g);
    CHECK(parse_strategy(text, g) == s);
    CHECK(serialize_strategy(parse_strategy(text, g), g) == text);
  }
  CHECK_THROWS_AS(parse_strategy("strategy 1 horizon 1\nat o1 -> a1:1/2\n", g), ParseError);
  CHECK_THROWS_AS(parse_strategy("strategy 1 horizon 1\nat nowhere -> a1\n", g), ParseError);
}

TEST_CASE("witnesses round-trip for every reduction") {
  const Game thirds = testing::load_fixture("thirds.game").game;
  const Game coins = testing::load_fixture("coins.game").game;
  const Game guess = testing::load_fixture("guessing.game").game;
  const std::vector<std::pair<const Game*, Reduction>> cases = {
      {&guess, separate_interaction(guess)}, {&thirds, uniformize(thirds)},
      {&thirds, coc_gadget(thirds)},          {&thirds, ost_gadget(thirds)},
      {&coins, naive_binary_reduction(coins)}};
  for (const auto& [g, r] : cases) {
    CAPTURE(to_string(r.witness.kind));
    const std::string text = serialize_witness(r.witness, *g, r.game);
    CHECK(parse_witness(text, *g, r.game) == r.witness);
  }
  CHECK(serialize_witness(uniformize(thirds).witness, thirds, thirds).find("n 3\n") != std::string::npos);
}

TEST_CASE("tables reproduce every cell") {
  const std::array<std::pair<ObservationClass, PlayerCount>, 5> cols = {{
      {ObservationClass::Co, PlayerCount::TwoAndHalf},
      {ObservationClass::Os1, PlayerCount::TwoAndHalf},
      {ObservationClass::Pa, PlayerCount::TwoAndHalf},
      {ObservationClass::Co, PlayerCount::OneAndHalf},
      {ObservationClass::Pa, PlayerCount::OneAndHalf},
  }};
  const std::array<std::array<std::string, 5>, 2> transitions = {{
      {"not", "free", "free", "not", "not"},
      {"free", "free", "free", "(NA)", "(NA)"},
  }};
  const std::array<std::array<std::string, 5>, 2> strategies = {{
      {"ε > 0", "not", "not", "ε ≥ 0", "ε ≥ 0"},
      {"not", "not", "not", "(NA)", "(NA)"},
  }};
  const std::array<Interaction, 2> rows = {Interaction::TurnBased, Interaction::Concurrent};
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 5; ++c) {
      const GameClass k{cols[c].first, rows[r], cols[c].second};
      CHECK(cell_text(TableAxis::Transitions, randomness_tables(TableAxis::Transitions, k).verdict) ==
            transitions[r][c]);
      CHECK(cell_text(TableAxis::Strategies, randomness_tables(TableAxis::Strategies, k).verdict) ==
            strategies[r][c]);
    }
  }
  CHECK(randomness_tables(TableAxis::Strategies, {ObservationClass::Co, Interaction::TurnBased,
                                                  PlayerCount::TwoAndHalf})
            .verdict == Verdict::EpsilonOptimalOnly);
  CHECK(render_tables().find("turn-based: not free free") != std::string::npos);
}

TEST_CASE("mutated documents fail only with library errors") {
  std::mt19937_64 rng(52);
  const std::string alphabet = "abs01/:{}->#\n ";
  for (const auto& name : testing::corpus()) {
    const std::string base = read_file(testing::fixture_path(name));
    for (int i = 0; i < 200; ++i) {
      std::string text = base;
      const int edits = 1 + static_cast<int>(rng() % 4);
      for (int e = 0; e < edits; ++e) {
        const std::size_t at = rng() % text.size();
        switch (rng() % 3) {
          case 0: text.erase(at, 1 + rng() % 5); break;
          case 1: text.insert(at, 1, alphabet[rng() % alphabet.size()]); break;
          default: text[at] = alphabet[rng() % alphabet.size()]; break;
        }
        if (text.empty()) text = "x";
      }
      try {
        parse_game_document(text);
      } catch (const Error&) {
      }
    }
  }
}
