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

#include "rfg/matrix_game.hpp"

#include <algorithm>
#include <optional>

#include "rfg/error.hpp"

namespace rfg {

namespace {

template <class T>
struct Tolerance;

template <>
struct Tolerance<Rational> {
  Rational eps;
  bool nonneg(const Rational& x) const { return x.sign() >= 0; }
  bool positive(const Rational& x) const { return x.sign() > 0; }
  bool geq(const Rational& a, const Rational& b) const { return a >= b; }
  Rational clamp(const Rational& x) const { return x; }
};

template <>
struct Tolerance<double> {
  double eps;
  bool nonneg(double x) const { return x >= -eps; }
  bool positive(double x) const { return x > eps; }
  bool geq(double a, double b) const { return a >= b - eps; }
  double clamp(double x) const { return x < 0 ? 0.0 : x; }
};

/// Advances `idx` to the next k-subset of [0,n) in lexicographic order.
bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

template <class T>
std::vector<std::size_t> distinct_rows(const Matrix<T>& m) {
  std::vector<std::size_t> keep;
  for (std::size_t r = 0; r < m.size(); ++r) {
    bool duplicate = false;
    for (std::size_t k : keep) {
      if (m[k] == m[r]) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) keep.push_back(r);
  }
  return keep;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& m) {
  Matrix<T> t(m[0].size(), std::vector<T>(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m[r].size(); ++c) t[c][r] = m[r][c];
  }
  return t;
}


/// Largest deduplicated dimension still solved by kernel enumeration.
constexpr std::size_t kKernelLimit = 5;

/// Simplex with Bland's rule on max 1'y s.t. M y <= 1, y >= 0, for a
/// matrix with entries >= 1. Bland's rule cannot cycle, so this terminates
/// in exact and in floating arithmetic.
template <class T>
MatrixGameSolution<T> solve_simplex(const Matrix<T>& m, const std::vector<std::size_t>& ur,
                                    const std::vector<std::size_t>& uc, std::size_t rows, std::size_t cols,
                                    const T& shift, const Tolerance<T>& tol) {
  const std::size_t nr = ur.size();
  const std::size_t nc = uc.size();
  const std::size_t width = nc + nr + 1;  // y, slacks, rhs
  Matrix<T> tab(nr + 1, std::vector<T>(width, T(0)));
  std::vector<std::size_t> basis(nr);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) tab[i][j] = m[ur[i]][uc[j]];
    tab[i][nc + i] = T(1);
    tab[i][width - 1] = T(1);
    basis[i] = nc + i;
  }
  for (std::size_t j = 0; j < nc; ++j) tab[nr][j] = T(-1);

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (tol.positive(-tab[nr][j])) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = nr;
    T best{};
    for (std::size_t i = 0; i < nr; ++i) {
      if (!tol.positive(tab[i][enter])) continue;
      const T ratio = tab[i][width - 1] / tab[i][enter];
      if (leave == nr || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    // Bounded: every column has a positive entry.
    const T pivot = tab[leave][enter];
    for (auto& x : tab[leave]) x /= pivot;
    for (std::size_t i = 0; i <= nr; ++i) {
      if (i == leave || tab[i][enter] == T(0)) continue;
      const T f = tab[i][enter];
      for (std::size_t j = 0; j < width; ++j) tab[i][j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }

  const T sum = tab[nr][width - 1];
  const T v = T(1) / sum;
  std::vector<T> p(rows, T(0));
  std::vector<T> q(cols, T(0));
  for (std::size_t i = 0; i < nr; ++i) {
    if (basis[i] < nc) q[uc[basis[i]]] = tol.clamp(tab[i][width - 1] * v);
    p[ur[i]] = tol.clamp(tab[nr][nc + i] * v);
  }
  return MatrixGameSolution<T>{v - shift, std::move(p), std::move(q)};
}

template <class T>
std::optional<MatrixGameSolution<T>> solve_kernels(const Matrix<T>& payoff, const Tolerance<T>& tol) {
  if (payoff.empty() || payoff[0].empty()) throw Error(ErrorCode::InvalidArgument, "empty payoff matrix");
  const std::size_t rows = payoff.size();
  const std::size_t cols = payoff[0].size();
  for (const auto& row : payoff) {
    if (row.size() != cols) throw Error(ErrorCode::InvalidArgument, "ragged payoff matrix");
  }
  // Shift so every entry is at least 1; the value is then positive and
  // kernels with a nonsingular submatrix exist.
  T lowest = payoff[0][0];
  for (const auto& row : payoff) {
    for (const auto& x : row) lowest = std::min(lowest, x);
  }
  const T shift = T(1) - lowest;
  Matrix<T> m = payoff;
  for (auto& row : m) {
    for (auto& x : row) x += shift;
  }
  const std::vector<std::size_t> ur = distinct_rows(m);
  const std::vector<std::size_t> uc = distinct_rows(transpose(m));
  const std::size_t nr = ur.size();
  const std::size_t nc = uc.size();
  if (std::min(nr, nc) > kKernelLimit) return solve_simplex(m, ur, uc, rows, cols, shift, tol);

  for (std::size_t k = 1; k <= std::min(nr, nc); ++k) {
    std::vector<std::size_t> ri(k);
    for (std::size_t i = 0; i < k; ++i) ri[i] = i;
    do {
      std::vector<std::size_t> ci(k);
      for (std::size_t i = 0; i < k; ++i) ci[i] = i;
      do {
        Matrix<T> sub(k, std::vector<T>(k));
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[ur[ri[i]]][uc[ci[j]]];
        }
        auto y = solve_linear(sub, std::vector<T>(k, T(1)));
        if (!y) continue;
        auto x = solve_linear(transpose(sub), std::vector<T>(k, T(1)));
        if (!x) continue;
        bool ok = true;
        T sum{};
        for (std::size_t i = 0; i < k && ok; ++i) {
          ok = tol.nonneg((*x)[i]) && tol.nonneg((*y)[i]);
          sum += (*y)[i];
        }
        if (!ok || !tol.positive(sum)) continue;
        const T v = T(1) / sum;
        std::vector<T> p(rows, T(0));
        std::vector<T> q(cols, T(0));
        for (std::size_t i = 0; i < k; ++i) {
          p[ur[ri[i]]] = tol.clamp((*x)[i] * v);
          q[uc[ci[i]]] = tol.clamp((*y)[i] * v);
        }
        for (std::size_t c = 0; c < cols && ok; ++c) {
          T earned{};
          for (std::size_t r = 0; r < rows; ++r) earned += p[r] * m[r][c];
          ok = tol.geq(earned, v);
        }
        for (std::size_t r = 0; r < rows && ok; ++r) {
          T conceded{};
          for (std::size_t c = 0; c < cols; ++c) conceded += m[r][c] * q[c];
          ok = tol.geq(v, conceded);
        }
        if (ok) return MatrixGameSolution<T>{v - shift, std::move(p), std::move(q)};
      } while (next_subset(ci, nc));
    } while (next_subset(ri, nr));
  }
  return std::nullopt;
}

}  // namespace

MatrixGameSolution<Rational> matrix_game_value(const Matrix<Rational>& payoff) {
  auto solution = solve_kernels(payoff, Tolerance<Rational>{});
  // Unreachable: some extreme optimal pair always has a square kernel.
  if (!solution) throw Error(ErrorCode::InvalidArgument, "no kernel found for matrix game");
  return *solution;
}

MatrixGameSolution<double> matrix_game_value(const Matrix<double>& payoff, double eps) {
  if (auto solution = solve_kernels(payoff, Tolerance<double>{eps})) return *solution;
  // Rounding can reject every kernel; the exact solver on the same numbers
  // cannot.
  Matrix<Rational> exact;
  for (const auto& row : payoff) {
    exact.emplace_back();
    for (double x : row) exact.back().push_back(Rational(mpq_class(x)));
  }
  auto sol = matrix_game_value(exact);
  MatrixGameSolution<double> out{sol.value.to_double(), {}, {}};
  for (const auto& x : sol.row) out.row.push_back(x.to_double());
  for (const auto& x : sol.col) out.col.push_back(x.to_double());
  return out;
}

}  // namespace rfg
