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

#include "rfg/tables.hpp"

#include <array>

namespace rfg {

namespace {

// Columns: complete, one-sided, partial, MDP, POMDP.
int column_of(const GameClass& c) {
  if (c.players == PlayerCount::OneAndHalf) return c.observation == ObservationClass::Co ? 3 : 4;
  switch (c.observation) {
    case ObservationClass::Co: return 0;
    case ObservationClass::Os1:
    case ObservationClass::Os2: return 1;
    case ObservationClass::Pa: return 2;
  }
  return 2;
}

constexpr std::array<std::array<Verdict, 5>, 2> kTransitions = {{
    {Verdict::NotFree, Verdict::Free, Verdict::Free, Verdict::NotFree, Verdict::NotFree},
    {Verdict::Free, Verdict::Free, Verdict::Free, Verdict::NotApplicable, Verdict::NotApplicable},
}};

constexpr std::array<std::array<Verdict, 5>, 2> kStrategies = {{
    {Verdict::EpsilonOptimalOnly, Verdict::NotFree, Verdict::NotFree, Verdict::Free, Verdict::Free},
    {Verdict::NotFree, Verdict::NotFree, Verdict::NotFree, Verdict::NotApplicable, Verdict::NotApplicable},
}};

}  // namespace

ClassificationEntry randomness_tables(TableAxis axis, const GameClass& game_class) {
  const int row = game_class.interaction == Interaction::TurnBased ? 0 : 1;
  const auto& table = axis == TableAxis::Transitions ? kTransitions : kStrategies;
  return ClassificationEntry{axis, game_class, table[row][column_of(game_class)]};
}

std::string cell_text(TableAxis axis, Verdict verdict) {
  switch (verdict) {
    case Verdict::Free: return axis == TableAxis::Strategies ? "ε ≥ 0" : "free";
    case Verdict::NotFree: return "not";
    case Verdict::EpsilonOptimalOnly: return "ε > 0";
    case Verdict::NotApplicable: return "(NA)";
  }
  return "?";
}

std::string render_tables() {
  // One representative class per column.
  const std::array<std::pair<ObservationClass, PlayerCount>, 5> columns = {{
      {ObservationClass::Co, PlayerCount::TwoAndHalf},
      {ObservationClass::Os2, PlayerCount::TwoAndHalf},
      {ObservationClass::Pa, PlayerCount::TwoAndHalf},
      {ObservationClass::Co, PlayerCount::OneAndHalf},
      {ObservationClass::Pa, PlayerCount::OneAndHalf},
  }};
  std::string out;
  for (TableAxis axis : {TableAxis::Transitions, TableAxis::Strategies}) {
    out += axis == TableAxis::Transitions ? "Table 1: can probabilistic transitions be eliminated\n"
                                          : "Table 2: do pure strategies match randomized ones (ε: up to ε)\n";
    out += "columns: complete one-sided partial (2.5-player) | MDP POMDP (1.5-player)\n";
    for (Interaction row : {Interaction::TurnBased, Interaction::Concurrent}) {
      out += to_string(row);
      out += ":";
      for (const auto& [obs, players] : columns) {
        out += " " + cell_text(axis, randomness_tables(axis, GameClass{obs, row, players}).verdict);
      }
      out += "\n";
    }
    if (axis == TableAxis::Transitions) out += "\n";
  }
  return out;
}

}  // namespace rfg
