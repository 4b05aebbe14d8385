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

#include <optional>
#include <string>
#include <string_view>

#include "rfg/game.hpp"
#include "rfg/objective.hpp"
#include "rfg/reductions.hpp"
#include "rfg/strategy.hpp"

namespace rfg {

/// A game file: the game and an optional objective section.
struct GameDocument {
  Game game;
  std::optional<Objective> objective;
};

struct ParseOptions {
  /// Reject documents whose game breaks an invariant (probability sums,
  /// totality, partitions). Syntax and unknown names are always errors.
  bool validate = true;
};

/// Line-oriented game format:
///
///   game <name>
///   actions1 <id>+
///   actions2 <id>+
///   init <state>                      (optional)
///   sink <state>                      (optional)
///   obs1 full | obs1 [<label>] { <state>+ } ...
///   state <id> [p1|p2|prob]
///   trans <a1> <a2> -> <state>[:<p/q>] ...
///   objective reach|safety|buchi|cobuchi { <state>* }
///   objective parity { <state>:<priority> ... }
///   objective bounded-reach <h> { <state>* }
///
/// "-" in place of an action means every action. At a state declared p1
/// (p2) `trans <a> -> ...` gives the row (column) of that action, and at a
/// state declared prob `trans -> ...` gives its only distribution. '#'
/// starts a comment at the beginning of a line or when followed by a blank;
/// otherwise it is part of an identifier, as in gadget actions.
/// Throws ParseError with the line and column of the first problem.
GameDocument parse_game_document(std::string_view text, const ParseOptions& options = {});
Game parse_game(std::string_view text);

/// Canonical text: lexicographic order everywhere, labelled blocks, one
/// line per block, turn-based states in short form. Byte-stable.
std::string serialize_game(const Game& game, const std::optional<Objective>& objective = std::nullopt);

std::string serialize_objective(const Game& game, const Objective& objective);

/// Strategy format:
///
///   strategy <1|2> horizon <h>
///   at <block-label>+ -> <action>[:<p/q>]+
Strategy parse_strategy(std::string_view text, const Game& game);
std::string serialize_strategy(const Strategy& strategy, const Game& game);

/// Witness format (states by name):
///
///   witness <kind>
///   n <n>
///   stutter none|double|probabilistic
///   informed <1|2>
///   embed <original> <reduced>
///   aux <reduced> <original>
///   prob <original>
///   succ <original> <slot>+
///   sink <reduced>
ReductionWitness parse_witness(std::string_view text, const Game& original, const Game& reduced);
std::string serialize_witness(const ReductionWitness& witness, const Game& original, const Game& reduced);

/// Whole file contents; throws InvalidArgument when unreadable.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace rfg
