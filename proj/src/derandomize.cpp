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

#include "rfg/derandomize.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rfg/error.hpp"
#include "rfg/evaluate.hpp"

namespace rfg {

namespace {

ActionId pick(const ActionDistribution& d, const Rational& x) {
  Rational cumulative;
  for (const auto& [a, w] : d) {
    cumulative += w;
    if (x <= cumulative) return a;
  }
  return d.back().first;
}

}  // namespace

Strategy sigma_x(const Strategy& sigma, std::span<const Rational> x) {
  if (x.size() < sigma.horizon()) {
    throw Error(ErrorCode::InvalidArgument, "coin sequence shorter than the strategy horizon");
  }
  for (const auto& xi : x) {
    if (xi.sign() < 0 || xi > Rational(1)) throw Error(ErrorCode::OutOfRange, "coin value " + xi.str() + " outside [0,1]");
  }
  Strategy out(sigma.owner(), sigma.horizon());
  for (const auto& [h, d] : sigma.table()) out.set_pure(h, pick(d, x[h.size() - 1]));
  return out;
}

Rational CellDecomposition::total_weight() const {
  Rational sum;
  for (const auto& c : cells) sum += c.weight;
  return sum;
}

CellDecomposition threshold_refinement(const Strategy& sigma, const Game& game, StateId init,
                                       const RefinementOptions& options) {
  const std::size_t steps = options.steps.value_or(sigma.horizon());
  if (steps > sigma.horizon()) {
    throw Error(ErrorCode::HorizonMismatch, "more coin tosses than the strategy horizon");
  }
  std::set<ObsHistory> relevant;
  if (options.strict) {
    for (const auto& [h, d] : sigma.table()) {
      if (h.size() <= steps) relevant.insert(h);
    }
  } else {
    for (const auto& h : reachable_histories(game, init, sigma.owner(), steps)) {
      if (sigma.table().count(h) != 0) relevant.insert(h);
    }
  }

  CellDecomposition out;
  out.horizon = steps;
  out.breakpoints.resize(steps);
  for (const auto& h : relevant) {
    Rational cumulative;
    const auto& d = sigma.table().at(h);
    for (std::size_t k = 0; k + 1 < d.size(); ++k) {
      cumulative += d[k].second;
      out.breakpoints[h.size() - 1].push_back(cumulative);
    }
  }
  // Sub-interval right endpoints and lengths per step.
  std::vector<std::vector<Rational>> ends(steps);
  std::vector<std::vector<Rational>> lengths(steps);
  for (std::size_t n = 0; n < steps; ++n) {
    auto& bp = out.breakpoints[n];
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    bp.erase(std::remove_if(bp.begin(), bp.end(), [](const Rational& r) { return r.sign() <= 0 || r >= Rational(1); }),
             bp.end());
    Rational previous;
    for (const auto& b : bp) {
      ends[n].push_back(b);
      lengths[n].push_back(b - previous);
      previous = b;
    }
    ends[n].push_back(Rational(1));
    lengths[n].push_back(Rational(1) - previous);
  }

  std::map<std::map<ObsHistory, ActionDistribution>, std::size_t> index;
  std::vector<std::size_t> choice(steps, 0);
  while (true) {
    std::vector<Rational> x(sigma.horizon(), Rational(1));
    Rational weight(1);
    for (std::size_t n = 0; n < steps; ++n) {
      x[n] = ends[n][choice[n]];
      weight *= lengths[n][choice[n]];
    }
    Strategy pure(sigma.owner(), steps);
    for (const auto& h : relevant) pure.set_pure(h, pick(sigma.table().at(h), x[h.size() - 1]));
    auto [it, inserted] = index.emplace(pure.table(), out.cells.size());
    if (inserted) {
      out.cells.push_back(DerandCell{std::move(pure), weight});
    } else {
      out.cells[it->second].weight += weight;
    }
    // Odometer over the product of sub-intervals.
    std::size_t n = steps;
    while (n > 0) {
      --n;
      if (++choice[n] < ends[n].size()) break;
      choice[n] = 0;
      if (n == 0) {
        n = steps + 1;
        break;
      }
    }
    if (steps == 0 || n == steps + 1) break;
  }
  return out;
}

namespace {

void require_pomdp(const Game& game, const Strategy& sigma, const BoundedReach& objective, const Policy* opponent) {
  if (opponent == nullptr && game.num_actions(rfg::opponent(sigma.owner())) != 1) {
    throw Error(ErrorCode::NotPomdp, "the player other than the strategy owner has several actions");
  }
  if (objective.horizon > sigma.horizon()) {
    throw Error(ErrorCode::HorizonMismatch, "objective horizon exceeds the strategy horizon");
  }
}

Rational value_of(const Game& game, StateId init, const Policy& mine, const Policy* opponent,
                  const BoundedReach& objective) {
  if (mine.owner() == Player::One) return evaluate_fixed(game, init, &mine, opponent, objective);
  return evaluate_fixed(game, init, opponent, &mine, objective);
}

}  // namespace

IntegralIdentity verify_integral_identity(const Game& game, StateId init, const Strategy& sigma,
                                          const BoundedReach& objective, const Policy* opponent) {
  require_pomdp(game, sigma, objective, opponent);
  IntegralIdentity out;
  out.lhs = value_of(game, init, sigma, opponent, objective);
  out.decomposition = threshold_refinement(sigma, game, init, RefinementOptions{false, objective.horizon});
  for (const auto& cell : out.decomposition.cells) {
    out.rhs += cell.weight * value_of(game, init, cell.pure, opponent, objective);
  }
  out.equal = out.lhs == out.rhs;
  return out;
}

BestPure best_pure(const Game& game, StateId init, const Strategy& sigma, const BoundedReach& objective,
                   const Policy* opponent) {
  require_pomdp(game, sigma, objective, opponent);
  if (sigma.is_pure()) return BestPure{sigma, value_of(game, init, sigma, opponent, objective)};
  auto cells = threshold_refinement(sigma, game, init, RefinementOptions{false, objective.horizon});
  std::optional<BestPure> best;
  for (auto& cell : cells.cells) {
    Rational v = value_of(game, init, cell.pure, opponent, objective);
    if (!best || v > best->value) best = BestPure{std::move(cell.pure), v};
  }
  return *best;
}

}  // namespace rfg
