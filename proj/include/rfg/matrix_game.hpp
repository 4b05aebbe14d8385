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

#include <vector>

#include "rfg/linear_algebra.hpp"
#include "rfg/rational.hpp"

namespace rfg {

/// Value and optimal mixed strategies of a zero-sum matrix game in which the
/// row player maximizes.
template <class T>
struct MatrixGameSolution {
  T value{};
  std::vector<T> row;
  std::vector<T> col;
};

/// Exact solution by enumerating square kernels (Shapley and Snow): for
/// every pair of equal-size row and column supports with a nonsingular
/// submatrix, the equalizing strategies are computed and accepted once they
/// satisfy the saddle-point inequalities on the whole matrix. Throws
/// InvalidArgument on an empty or ragged matrix.
MatrixGameSolution<Rational> matrix_game_value(const Matrix<Rational>& payoff);

/// Floating-point variant with tolerance `eps` on the inequalities.
MatrixGameSolution<double> matrix_game_value(const Matrix<double>& payoff, double eps = 1e-10);

}  // namespace rfg
