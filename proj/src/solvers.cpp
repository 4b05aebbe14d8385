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

#include "rfg/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>

#include "rfg/error.hpp"
#include "rfg/linear_algebra.hpp"
#include "rfg/matrix_game.hpp"

namespace rfg {

namespace {

void require_complete(const Game& game) {
  if (classify_game(game).observation != ObservationClass::Co) {
    throw Error(ErrorCode::NotCompleteObservation, "game '" + game.name() + "' is not complete-observation");
  }
}

using SparseRow = std::vector<std::pair<StateId, double>>;

/// Per-state matrix structure with duplicate rows and columns removed.
struct StateMatrix {
  std::vector<std::vector<SparseRow>> cells;  // [row][col]
};

StateMatrix build_state_matrix(const Game& game, StateId s) {
  const std::size_t n1 = game.num_actions(Player::One);
  const std::size_t n2 = game.num_actions(Player::Two);
  std::vector<ActionId> rows;
  std::vector<ActionId> cols;
  for (ActionId a = 0; a < n1; ++a) {
    bool duplicate = false;
    for (ActionId r : rows) {
      bool same = true;
      for (ActionId b = 0; b < n2 && same; ++b) same = game.delta(s, a, b) == game.delta(s, r, b);
      if (same) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) rows.push_back(a);
  }
  for (ActionId b = 0; b < n2; ++b) {
    bool duplicate = false;
    for (ActionId c : cols) {
      bool same = true;
      for (ActionId a : rows) {
        if (!(game.delta(s, a, b) == game.delta(s, a, c))) {
          same = false;
          break;
        }
      }
      if (same) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) cols.push_back(b);
  }
  StateMatrix m;
  for (ActionId a : rows) {
    m.cells.emplace_back();
    for (ActionId b : cols) {
      SparseRow row;
      for (const auto& [t, w] : game.delta(s, a, b).entries()) row.emplace_back(t, w.to_double());
      m.cells.back().push_back(std::move(row));
    }
  }
  return m;
}

double expectation(const SparseRow& row, const std::vector<double>& v) {
  double sum = 0.0;
  for (const auto& [t, w] : row) sum += w * v[t];
  return sum;
}

}  // namespace

ValueVector concurrent_reach_value(const Game& game, const StateSet& target, const ShapleyOptions& options) {
  require_complete(game);
  if (target.empty()) throw Error(ErrorCode::InvalidArgument, "reachability target is empty");
  const std::size_t n = game.num_states();
  const std::vector<bool> in_target = indicator(target, n);

  std::vector<StateMatrix> structure(n);
  for (StateId s = 0; s < n; ++s) {
    if (!in_target[s]) structure[s] = build_state_matrix(game, s);
  }

  ValueVector out;
  out.mode = ValueVector::Mode::Approx;
  out.tolerance = options.tolerance;
  std::vector<double> v(n, 0.0);
  for (StateId s = 0; s < n; ++s) v[s] = in_target[s] ? 1.0 : 0.0;
  if (options.observer) options.observer(0, v);

  std::vector<double> next(n);
  for (std::size_t iter = 1; iter <= options.max_iterations; ++iter) {
    double change = 0.0;
    for (StateId s = 0; s < n; ++s) {
      if (in_target[s]) {
        next[s] = 1.0;
        continue;
      }
      const auto& cells = structure[s].cells;
      const std::size_t rows = cells.size();
      const std::size_t cols = cells[0].size();
      double value = 0.0;
      if (cols == 1) {
        value = -1.0;
        for (std::size_t r = 0; r < rows; ++r) value = std::max(value, expectation(cells[r][0], v));
      } else if (rows == 1) {
        value = 2.0;
        for (std::size_t c = 0; c < cols; ++c) value = std::min(value, expectation(cells[0][c], v));
      } else {
        Matrix<double> payoff(rows, std::vector<double>(cols));
        for (std::size_t r = 0; r < rows; ++r) {
          for (std::size_t c = 0; c < cols; ++c) payoff[r][c] = expectation(cells[r][c], v);
        }
        value = matrix_game_value(payoff).value;
      }
      next[s] = std::clamp(value, 0.0, 1.0);
      change = std::max(change, std::fabs(next[s] - v[s]));
    }
    std::swap(v, next);
    out.iterations = iter;
    if (options.observer) options.observer(iter, v);
    if (change < options.tolerance) break;
  }
  out.approx = std::move(v);
  return out;
}

// ---------------------------------------------------------------------------
// MDPs

Player mdp_controller(const Game& game) {
  if (game.num_actions(Player::Two) == 1) return Player::One;
  if (game.num_actions(Player::One) == 1) return Player::Two;
  throw Error(ErrorCode::NotMdp, "game '" + game.name() + "' has several actions for both players");
}

namespace {

struct Mdp {
  const Game& game;
  Player controller;

  std::size_t actions() const { return game.num_actions(controller); }
  const Distribution& succ(StateId s, ActionId a) const {
    return controller == Player::One ? game.delta(s, a, 0) : game.delta(s, 0, a);
  }
  bool support_within(StateId s, ActionId a, const std::vector<bool>& set) const {
    for (const auto& [t, w] : succ(s, a).entries()) {
      if (!set[t]) return false;
    }
    return true;
  }
  bool support_meets(StateId s, ActionId a, const std::vector<bool>& set) const {
    for (const auto& [t, w] : succ(s, a).entries()) {
      if (set[t]) return true;
    }
    return false;
  }
};

Mdp make_mdp(const Game& game) {
  require_complete(game);
  return Mdp{game, mdp_controller(game)};
}

/// States with a path into `goal` through states of `through`.
std::vector<bool> can_reach(const Mdp& m, const std::vector<bool>& goal, const std::vector<bool>& through) {
  const std::size_t n = m.game.num_states();
  std::vector<bool> reach = goal;
  bool changed = true;
  while (changed) {
    changed = false;
    for (StateId s = 0; s < n; ++s) {
      if (reach[s] || !through[s]) continue;
      for (ActionId a = 0; a < m.actions() && !reach[s]; ++a) {
        if (m.support_meets(s, a, reach)) {
          reach[s] = true;
          changed = true;
        }
      }
    }
  }
  return reach;
}

/// Largest subset of `within` in which some action keeps the play forever.
std::vector<bool> can_stay(const Mdp& m, std::vector<bool> within) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (StateId s = 0; s < m.game.num_states(); ++s) {
      if (!within[s]) continue;
      bool stay = false;
      for (ActionId a = 0; a < m.actions() && !stay; ++a) stay = m.support_within(s, a, within);
      if (!stay) {
        within[s] = false;
        changed = true;
      }
    }
  }
  return within;
}

/// Almost-sure reachability of `goal` for the controller.
std::vector<bool> almost_sure_reach(const Mdp& m, const std::vector<bool>& goal) {
  const std::size_t n = m.game.num_states();
  std::vector<bool> u(n, true);
  while (true) {
    std::vector<bool> r(n, false);
    for (StateId s = 0; s < n; ++s) r[s] = goal[s] && u[s];
    bool changed = true;
    while (changed) {
      changed = false;
      for (StateId s = 0; s < n; ++s) {
        if (r[s] || !u[s]) continue;
        for (ActionId a = 0; a < m.actions(); ++a) {
          if (m.support_within(s, a, u) && m.support_meets(s, a, r)) {
            r[s] = true;
            changed = true;
            break;
          }
        }
      }
    }
    if (r == u) return u;
    u = std::move(r);
  }
}

void tarjan(const std::vector<std::vector<StateId>>& adj, const std::vector<bool>& alive, std::vector<int>& comp) {
  const std::size_t n = adj.size();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<StateId> stack;
  int counter = 0;
  int components = 0;
  std::function<void(StateId)> visit = [&](StateId v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (StateId w : adj[v]) {
      if (!alive[w]) continue;
      if (index[w] == -1) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      StateId w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = components;
      } while (w != v);
      ++components;
    }
  };
  comp.assign(n, -1);
  for (StateId v = 0; v < n; ++v) {
    if (alive[v] && index[v] == -1) visit(v);
  }
}

std::vector<StateSet> mecs(const Mdp& m, std::vector<bool> alive) {
  const std::size_t n = m.game.num_states();
  std::vector<std::vector<bool>> enabled(n, std::vector<bool>(m.actions(), true));
  std::vector<int> comp;
  while (true) {
    bool changed = false;
    // Drop actions leaving the live set, then states without actions.
    for (StateId s = 0; s < n; ++s) {
      if (!alive[s]) continue;
      bool any = false;
      for (ActionId a = 0; a < m.actions(); ++a) {
        if (enabled[s][a] && !m.support_within(s, a, alive)) enabled[s][a] = false;
        any = any || enabled[s][a];
      }
      if (!any) {
        alive[s] = false;
        changed = true;
      }
    }
    if (changed) continue;
    std::vector<std::vector<StateId>> adj(n);
    for (StateId s = 0; s < n; ++s) {
      if (!alive[s]) continue;
      for (ActionId a = 0; a < m.actions(); ++a) {
        if (!enabled[s][a]) continue;
        for (const auto& [t, w] : m.succ(s, a).entries()) adj[s].push_back(t);
      }
    }
    tarjan(adj, alive, comp);
    for (StateId s = 0; s < n; ++s) {
      if (!alive[s]) continue;
      for (ActionId a = 0; a < m.actions(); ++a) {
        if (!enabled[s][a]) continue;
        for (const auto& [t, w] : m.succ(s, a).entries()) {
          if (comp[t] != comp[s]) {
            enabled[s][a] = false;
            changed = true;
            break;
          }
        }
      }
    }
    if (!changed) break;
  }
  std::map<int, StateSet> grouped;
  for (StateId s = 0; s < n; ++s) {
    if (alive[s]) grouped[comp[s]].push_back(s);
  }
  std::vector<StateSet> out;
  for (auto& [c, states] : grouped) out.push_back(std::move(states));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<StateSet> maximal_end_components(const Game& game, const std::vector<bool>& allowed) {
  Mdp m = make_mdp(game);
  std::vector<bool> alive = allowed.empty() ? std::vector<bool>(game.num_states(), true) : allowed;
  return mecs(m, std::move(alive));
}

MdpSolution mdp_reach_value(const Game& game, const StateSet& target) {
  Mdp m = make_mdp(game);
  const std::size_t n = game.num_states();
  const std::vector<bool> in_target = indicator(target, n);
  const bool maximize = m.controller == Player::One;

  // States whose value is fixed by graph analysis.
  std::vector<bool> zero(n, false);
  if (maximize) {
    std::vector<bool> all(n, true);
    std::vector<bool> reach = can_reach(m, in_target, all);
    for (StateId s = 0; s < n; ++s) zero[s] = !reach[s];
  } else {
    std::vector<bool> outside(n);
    for (StateId s = 0; s < n; ++s) outside[s] = !in_target[s];
    zero = can_stay(m, outside);
  }

  std::vector<ActionId> policy(n, 0);
  std::vector<bool> active(n, false);
  for (StateId s = 0; s < n; ++s) active[s] = !in_target[s] && !zero[s];

  if (maximize) {
    // Initial policy follows shortest paths to the target, so every active
    // state reaches it with positive probability.
    std::vector<bool> done = in_target;
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<bool> layer = done;
      for (StateId s = 0; s < n; ++s) {
        if (done[s] || !active[s]) continue;
        for (ActionId a = 0; a < m.actions(); ++a) {
          if (m.support_meets(s, a, done)) {
            policy[s] = a;
            layer[s] = true;
            changed = true;
            break;
          }
        }
      }
      done = std::move(layer);
    }
  } else {
    for (StateId s = 0; s < n; ++s) {
      if (!zero[s]) continue;
      for (ActionId a = 0; a < m.actions(); ++a) {
        if (m.support_within(s, a, zero)) {
          policy[s] = a;
          break;
        }
      }
    }
  }

  std::vector<Rational> x(n);
  for (StateId s = 0; s < n; ++s) x[s] = in_target[s] ? Rational(1) : Rational(0);

  while (true) {
    // Evaluate the current policy on the states that reach the target under it.
    std::vector<bool> reach_under = in_target;
    bool grew = true;
    while (grew) {
      grew = false;
      for (StateId s = 0; s < n; ++s) {
        if (reach_under[s] || !active[s]) continue;
        if (m.support_meets(s, policy[s], reach_under)) {
          reach_under[s] = true;
          grew = true;
        }
      }
    }
    std::vector<StateId> unknowns;
    std::vector<std::size_t> pos(n, n);
    for (StateId s = 0; s < n; ++s) {
      if (active[s] && reach_under[s]) {
        pos[s] = unknowns.size();
        unknowns.push_back(s);
      }
    }
    const std::size_t k = unknowns.size();
    Matrix<Rational> a(k, std::vector<Rational>(k));
    std::vector<Rational> b(k);
    for (std::size_t i = 0; i < k; ++i) {
      StateId s = unknowns[i];
      a[i][i] += Rational(1);
      for (const auto& [t, w] : m.succ(s, policy[s]).entries()) {
        if (in_target[t]) {
          b[i] += w;
        } else if (pos[t] < n) {
          a[i][pos[t]] -= w;
        }
      }
    }
    auto sol = solve_linear(a, b);
    if (!sol) throw Error(ErrorCode::InvalidArgument, "singular policy evaluation system");
    for (StateId s = 0; s < n; ++s) {
      if (active[s]) x[s] = pos[s] < n ? (*sol)[pos[s]] : Rational(0);
    }

    bool improved = false;
    for (StateId s = 0; s < n; ++s) {
      if (!active[s]) continue;
      Rational best = x[s];
      for (ActionId act = 0; act < m.actions(); ++act) {
        Rational val;
        for (const auto& [t, w] : m.succ(s, act).entries()) val += w * x[t];
        if ((maximize && val > best) || (!maximize && val < best)) {
          best = val;
          policy[s] = act;
          improved = true;
        }
      }
    }
    if (!improved) break;
  }

  MdpSolution out;
  out.controller = m.controller;
  out.values.mode = ValueVector::Mode::Exact;
  out.values.exact = std::move(x);
  out.selector = std::move(policy);
  return out;
}

StateSet mdp_almost_sure(const Game& game, const Objective& objective) {
  Mdp m = make_mdp(game);
  const std::size_t n = game.num_states();
  const bool buechi = std::holds_alternative<Buechi>(objective);
  if (!buechi && !std::holds_alternative<Reach>(objective)) {
    throw Error(ErrorCode::InvalidArgument, "almost-sure analysis covers reach and buchi objectives");
  }
  const StateSet& target = buechi ? std::get<Buechi>(objective).target : std::get<Reach>(objective).target;
  const std::vector<bool> in_target = indicator(target, n);
  std::vector<bool> outside(n);
  for (StateId s = 0; s < n; ++s) outside[s] = !in_target[s];

  std::vector<bool> win(n, false);
  if (m.controller == Player::One) {
    if (!buechi) {
      win = almost_sure_reach(m, in_target);
    } else {
      std::vector<bool> good(n, false);
      for (const auto& mec : mecs(m, std::vector<bool>(n, true))) {
        bool hits = std::any_of(mec.begin(), mec.end(), [&](StateId s) { return in_target[s]; });
        if (!hits) continue;
        for (StateId s : mec) good[s] = true;
      }
      win = almost_sure_reach(m, good);
    }
  } else {
    // The controller is the opponent: Player 1 loses once the opponent can,
    // with positive probability, settle away from the target.
    std::vector<bool> lose;
    if (!buechi) {
      lose = can_reach(m, can_stay(m, outside), outside);
    } else {
      std::vector<bool> trap(n, false);
      for (const auto& mec : mecs(m, outside)) {
        for (StateId s : mec) trap[s] = true;
      }
      lose = can_reach(m, trap, std::vector<bool>(n, true));
    }
    for (StateId s = 0; s < n; ++s) win[s] = !lose[s];
  }
  StateSet out;
  for (StateId s = 0; s < n; ++s) {
    if (win[s]) out.push_back(s);
  }
  return out;
}

}  // namespace rfg
