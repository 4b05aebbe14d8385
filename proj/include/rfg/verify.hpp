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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rfg/game.hpp"
#include "rfg/reductions.hpp"

namespace rfg {

/// Gadget states whose matrix is not a Latin square of the slot tuple
/// (every row and every column a permutation of the slots).
std::vector<std::string> check_latin_squares(const Game& reduced, const ReductionWitness& witness);

/// Gadget states where uniform play by one player over the gadget actions
/// fails to give exactly the slot distribution against some pure choice of
/// the other player. Covers both gadgets and both players.
std::vector<std::string> check_uniform_simulation(const Game& reduced, const ReductionWitness& witness);

struct VerifyOptions {
  ReductionKind kind = ReductionKind::CocGadget;
  std::size_t trials = 50;
  std::uint64_t seed = 42;
  std::size_t max_states = 5;
  double tolerance = 1e-6;   // allowed value gap
  double solver_tolerance = 1e-9;
  std::size_t max_horizon = 4;
};

struct TrialReport {
  std::size_t index = 0;
  bool pass = true;
  std::string summary;
  std::string failure;         // first failed check
  std::string counterexample;  // serialized original game
};

struct VerifyReport {
  std::vector<TrialReport> trials;
  bool pass() const;
  std::string render() const;
};

/// Runs seeded random trials of one reduction (separate, coc or ost, the
/// latter two after separation and uniformization). Each trial checks
/// structure, exact strategy-pair preservation through the witness
/// translation and, for complete-observation games, value preservation.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace rfg
