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

#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rfg/rational.hpp"

namespace rfg {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Pivot selection and zero tests differ between exact and floating point.
template <class T>
struct PivotTraits;

template <>
struct PivotTraits<Rational> {
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  /// Any nonzero entry is a fine pivot in exact arithmetic.
  static bool better(const Rational& candidate, const Rational& best) { return best.is_zero() && !candidate.is_zero(); }
};

template <>
struct PivotTraits<double> {
  static constexpr double kEps = 1e-12;
  static bool is_zero(double x) { return std::fabs(x) < kEps; }
  static bool better(double candidate, double best) { return std::fabs(candidate) > std::fabs(best); }
};

/// Solves the square system a x = b by Gaussian elimination. Returns nullopt
/// when the matrix is singular.
template <class T>
std::optional<std::vector<T>> solve_linear(Matrix<T> a, std::vector<T> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (PivotTraits<T>::better(a[r][col], a[pivot][col])) pivot = r;
    }
    if (PivotTraits<T>::is_zero(a[pivot][col])) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (PivotTraits<T>::is_zero(a[r][col])) continue;
      T factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<T> x(n);
  for (std::size_t i = n; i-- > 0;) {
    T sum = b[i];
    for (std::size_t c = i + 1; c < n; ++c) sum -= a[i][c] * x[c];
    x[i] = sum / a[i][i];
  }
  return x;
}

}  // namespace rfg
