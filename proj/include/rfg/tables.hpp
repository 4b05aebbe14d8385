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

#include <string>

#include "rfg/game.hpp"

namespace rfg {

enum class TableAxis { Transitions, Strategies };

enum class Verdict { Free, NotFree, EpsilonOptimalOnly, NotApplicable };

struct ClassificationEntry {
  TableAxis axis = TableAxis::Transitions;
  GameClass game_class;
  Verdict verdict = Verdict::NotApplicable;
};

/// Whether randomness can be dropped for the class: from the transition
/// function (Transitions) or from strategies (Strategies). One-and-a-half
/// player classes are the MDP column under complete observation and the
/// POMDP column otherwise.
ClassificationEntry randomness_tables(TableAxis axis, const GameClass& game_class);

/// Cell text as printed in the tables: "free", "not", "ε > 0", "ε ≥ 0", "(NA)".
std::string cell_text(TableAxis axis, Verdict verdict);

/// Both tables as plain text, one line per interaction row, e.g.
/// "turn-based: not free free not not".
std::string render_tables();

}  // namespace rfg
