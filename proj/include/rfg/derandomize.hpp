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
#include <optional>
#include <span>
#include <vector>

#include "rfg/game.hpp"
#include "rfg/objective.hpp"
#include "rfg/strategy.hpp"

namespace rfg {

/// Pure strategy obtained by fixing the coin tosses to `x`: at a history of
/// length n+1 the action is the first, in action order, whose cumulative
/// probability reaches x_n. Throws OutOfRange for x outside [0,1] and
/// InvalidArgument when x is shorter than the horizon.
Strategy sigma_x(const Strategy& sigma, std::span<const Rational> x);

/// A pure strategy together with the measure of the coin sequences that
/// produce it.
struct DerandCell {
  Strategy pure;
  Rational weight;
};

struct CellDecomposition {
  std::vector<DerandCell> cells;
  std::size_t horizon = 0;
  /// Per step, the sorted thresholds strictly inside (0,1).
  std::vector<std::vector<Rational>> breakpoints;

  Rational total_weight() const;
};

struct RefinementOptions {
  /// Use every history in the table rather than only reachable ones.
  bool strict = false;
  /// Number of coin tosses; defaults to the strategy horizon.
  std::optional<std::size_t> steps;
};

/// Splits [0,1]^steps into boxes on which sigma_x is constant. One coin
/// x_n serves every history of length n+1, so the thresholds of all those
/// histories refine the same interval. Cells with equal pure strategies
/// are merged.
CellDecomposition threshold_refinement(const Strategy& sigma, const Game& game, StateId init,
                                       const RefinementOptions& options = {});

struct IntegralIdentity {
  Rational lhs;
  Rational rhs;
  bool equal = false;
  CellDecomposition decomposition;
};

/// Compares the value of sigma with the cell-weighted values of its pure
/// strategies. `opponent` fixes the other player; when null the other
/// player must have a single action (NotPomdp otherwise).
IntegralIdentity verify_integral_identity(const Game& game, StateId init, const Strategy& sigma,
                                          const BoundedReach& objective, const Policy* opponent = nullptr);

struct BestPure {
  Strategy strategy;
  Rational value;
};

/// Best cell strategy; its value is at least the value of sigma.
BestPure best_pure(const Game& game, StateId init, const Strategy& sigma, const BoundedReach& objective,
                   const Policy* opponent = nullptr);

}  // namespace rfg
