// Copyright 2026 The Segmentation Authors
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

#include "seg/canonical.h"

#include <algorithm>
#include <string>

#include "seg/envelope.h"
#include "seg/error.h"

namespace seg {

Rational AllocationCurve::Area(size_t i, size_t j) const {
  return Area(0, i, j);
}

Rational AllocationCurve::Area(size_t a, size_t b, size_t j) const {
  Rational s;
  for (size_t l = a; l < b; ++l) s += (grid[l + 1] - grid[l]) * x(l, j);
  return s;
}

Rational AllocationCurve::Payment(size_t i, size_t j) const {
  return grid[i] * x(i, j) - Area(i, j);
}

Rational CurveRevenue(const Prior& prior, const AllocationCurve& curve) {
  Rational r;
  for (const auto& [i, j] : prior.Support()) {
    r += prior.mass(i, j) * curve.Payment(i + 1, j);
  }
  return r;
}

namespace {

void CheckGrid(const Prior& prior, const AuctionMenu& menu) {
  if (!prior.IsNormalized()) {
    throw Error(ErrorCode::kBadShape, "canonicalization needs a normalized prior");
  }
  if (menu.payment.rows() != prior.num_values() ||
      menu.payment.cols() != prior.num_levels() ||
      menu.allocation.rows() != prior.num_values() ||
      menu.allocation.cols() != prior.num_levels()) {
    throw Error(ErrorCode::kBadShape, "menu does not match the prior's grid");
  }
}

// Revenue every stage must reproduce: the menu's, once it matches R(D).
Rational OptimalTarget(const Prior& prior, const AuctionMenu& menu) {
  if (auto v = FindMenuViolation(prior, menu)) {
    throw Error(ErrorCode::kICViolation, "input menu: " + *v);
  }
  const Rational r = MenuRevenue(prior, menu);
  const Rational best = OptimalRevenue(prior);
  if (r != best) {
    throw Error(ErrorCode::kNotOptimal, "menu earns " + r.ToString() +
                                            ", the optimum is " +
                                            best.ToString());
  }
  return r;
}

void RequireFeasible(const Prior& prior, const AllocationCurve& curve,
                     const char* step) {
  if (auto v = FindCurveViolation(prior, curve)) {
    throw Error(ErrorCode::kICViolation, std::string(step) + ": " + *v);
  }
}

void RequireRevenue(const Prior& prior, const AllocationCurve& curve,
                    const Rational& target, const char* step) {
  const Rational r = CurveRevenue(prior, curve);
  if (r != target) {
    throw Error(ErrorCode::kNotOptimal,
                std::string(step) + ": curve revenue " + r.ToString() +
                    " differs from the menu optimum " + target.ToString());
  }
}

}  // namespace

AllocationCurve CurveFromMenu(const Prior& prior, const AuctionMenu& menu) {
  CheckGrid(prior, menu);
  const size_t m = prior.num_values(), k = prior.num_levels();
  AllocationCurve curve;
  curve.grid.push_back(Rational(0));
  for (const Rational& v : prior.values()) curve.grid.push_back(v);
  curve.x = Matrix<Rational>(m + 1, k);
  for (size_t j = 0; j < k; ++j) {
    auto utility = [&](size_t i) {
      return prior.value(i) * menu.allocation(i, j) - menu.payment(i, j);
    };
    curve.x(0, j) = utility(0) / curve.grid[1];
    for (size_t i = 1; i < m; ++i) {
      curve.x(i, j) =
          (utility(i) - utility(i - 1)) / (curve.grid[i + 1] - curve.grid[i]);
    }
    curve.x(m, j) = menu.allocation(m - 1, j);
  }
  return curve;
}

std::optional<std::string> FindCurveViolation(const Prior& prior,
                                              const AllocationCurve& curve) {
  const size_t m = curve.top(), k = curve.x.cols();
  for (size_t j = 0; j < k; ++j) {
    const std::string level = " at level " + prior.level(j).ToString();
    for (size_t i = 0; i <= m; ++i) {
      const Rational& x = curve.x(i, j);
      if (x.sign() < 0 || x > Rational(1)) {
        return "x_" + std::to_string(i) + " = " + x.ToString() +
               " outside [0,1]" + level;
      }
      if (i > 0 && x < curve.x(i - 1, j)) {
        return "curve decreases at w_" + std::to_string(i) + level;
      }
    }
    if (j > 0) {
      for (size_t i = 1; i <= m; ++i) {
        if (curve.Area(i, j) < curve.Area(i, j - 1)) {
          return "area below the previous level at w_" + std::to_string(i) +
                 level;
        }
      }
    }
  }
  if (prior.mode() == Mode::kPublicBudget) {
    if (curve.Payment(m, 0) > prior.budget()) {
      return "top payment " + curve.Payment(m, 0).ToString() +
             " exceeds the budget";
    }
  }
  return std::nullopt;
}

AllocationCurve CanonicalizePublic(const Prior& prior,
                                   const AuctionMenu& menu) {
  if (prior.mode() != Mode::kPublicBudget) {
    throw Error(ErrorCode::kWrongMode, "public canonicalization");
  }
  CheckGrid(prior, menu);
  const Rational target = OptimalTarget(prior, menu);
  const Rational& b = prior.budget();
  const size_t m = prior.num_values();

  if (b <= prior.value(0)) {
    AllocationCurve curve;
    curve.grid.push_back(Rational(0));
    for (const Rational& v : prior.values()) curve.grid.push_back(v);
    curve.x = Matrix<Rational>(m + 1, 1, Rational(1));
    curve.x(0, 0) = Rational(1) - b / curve.grid[1];
    curve.budget_capped = true;
    RequireRevenue(prior, curve, target, "posted budget");
    return curve;
  }

  AllocationCurve curve = CurveFromMenu(prior, menu);
  RequireFeasible(prior, curve, "averaging");
  RequireRevenue(prior, curve, target, "averaging");

  const Rational shift = Rational(1) - curve.x(m, 0);
  for (size_t i = 0; i <= m; ++i) curve.x(i, 0) += shift;

  Rational slope(1);
  for (size_t i = 2; i <= m; ++i) {
    const Rational s = curve.Area(i, 0) / (curve.grid[i] - curve.grid[1]);
    if (s < slope) slope = s;
  }
  curve.x(0, 0) = Rational(0);
  for (size_t i = 1; i <= m; ++i) curve.x(i, 0) = std::max(slope, curve.x(i, 0));

  RequireFeasible(prior, curve, "tangent");
  RequireRevenue(prior, curve, target, "tangent");
  return curve;
}

namespace {

// Makes level j+1 agree with level j on [w_i, w_{i+1}) and lowers the rest
// of level j+1 to the tangent from (w_{i+1}, Area(w_{i+1}, j)), taken
// against level j+1's areas before this step.
void Align(AllocationCurve& curve, size_t i, size_t j) {
  const size_t m = curve.top();
  std::vector<Rational> before(m + 1);
  for (size_t l = 0; l <= m; ++l) before[l] = curve.Area(l, j + 1);

  curve.x(i, j + 1) = curve.x(i, j);
  if (i == m) return;
  const Rational base = curve.Area(i + 1, j);
  std::optional<Rational> y;
  for (size_t t = i + 2; t <= m; ++t) {
    Rational s = (before[t] - base) / (curve.grid[t] - curve.grid[i + 1]);
    if (!y || s < *y) y = std::move(s);
  }
  if (!y) return;
  const Rational capped =
      std::min(std::max(*y, Rational(0)), Rational(1));
  for (size_t l = i + 1; l <= m; ++l) {
    curve.x(l, j + 1) = std::max(capped, curve.x(l, j + 1));
  }
}

}  // namespace

AllocationCurve CanonicalizeDeadlines(const Prior& prior,
                                      const AuctionMenu& menu) {
  if (prior.mode() != Mode::kDeadlines) {
    throw Error(ErrorCode::kWrongMode, "deadlines canonicalization");
  }
  CheckGrid(prior, menu);
  const Rational target = OptimalTarget(prior, menu);
  const size_t m = prior.num_values(), k = prior.num_levels();
  const LowerEnvelope env = ComputeLowerEnvelope(prior.masses());

  AllocationCurve curve = CurveFromMenu(prior, menu);
  RequireFeasible(prior, curve, "averaging");
  RequireRevenue(prior, curve, target, "averaging");

  curve.x(0, 0) = Rational(0);
  RequireFeasible(prior, curve, "zeroing x_01");

  // Sweep each level up to the last value that carries no mass at any later
  // level; the agreement left of each envelope point needs that bound.
  for (size_t j = 0; j + 1 < k; ++j) {
    for (size_t i = 0; i <= env.cuts[j + 1]; ++i) {
      Align(curve, i, j);
      RequireFeasible(prior, curve, "align");
    }
  }
  RequireRevenue(prior, curve, target, "align");

  for (size_t p = 0; p + 1 < env.points.size(); ++p) {
    const size_t a = env.points[p].first + 1, r = env.points[p].second;
    const size_t b = env.points[p + 1].first + 1;
    if (b <= a + 1) continue;
    const Rational flat =
        curve.Area(a, b, r) / (curve.grid[b] - curve.grid[a]);
    for (size_t i = a; i < b; ++i) {
      for (size_t j = r; j < k; ++j) curve.x(i, j) = flat;
    }
  }
  RequireFeasible(prior, curve, "flattening");

  const size_t top = env.points.back().first + 1;
  for (size_t i = top; i <= m; ++i) {
    for (size_t j = env.points.back().second; j < k; ++j) {
      curve.x(i, j) = Rational(1);
    }
  }
  RequireFeasible(prior, curve, "top allocation");
  RequireRevenue(prior, curve, target, "top allocation");

  const std::vector<std::string> failed =
      CanonicalPropertyFailures(prior, curve);
  if (!failed.empty()) throw Error(ErrorCode::kPropertyViolation, failed[0]);
  return curve;
}

std::vector<std::string> CanonicalPropertyFailures(
    const Prior& prior, const AllocationCurve& curve) {
  std::vector<std::string> failed;
  const size_t m = curve.top(), k = curve.x.cols();
  if (prior.mode() == Mode::kPublicBudget) {
    if (curve.budget_capped) return failed;
    if (!curve.x(0, 0).is_zero()) failed.push_back("x_0 = 0");
    if (curve.x(m, 0) != Rational(1)) failed.push_back("x_m = 1");
    return failed;
  }
  const LowerEnvelope env = ComputeLowerEnvelope(prior.masses());
  for (size_t j = 0; j < k; ++j) {
    if (!curve.x(0, j).is_zero()) {
      failed.push_back("x_0j = 0");
      break;
    }
  }
  bool agree = true;
  for (const auto& [a0, r] : env.points) {
    for (size_t i = 0; i <= a0 + 1 && agree; ++i) {
      for (size_t j = r; j < k; ++j) agree = agree && curve.x(i, j) == curve.x(i, r);
    }
  }
  if (!agree) failed.push_back("agreement left of envelope points");
  bool flat = true;
  for (size_t p = 0; p + 1 < env.points.size(); ++p) {
    const size_t a = env.points[p].first + 1, r = env.points[p].second;
    const size_t b = env.points[p + 1].first + 1;
    for (size_t i = a; i < b; ++i) {
      for (size_t j = r; j < k; ++j) flat = flat && curve.x(i, j) == curve.x(a, j);
    }
  }
  if (!flat) failed.push_back("flat between envelope points");
  if (curve.x(m, k - 1) != Rational(1)) failed.push_back("x_mk = 1");
  return failed;
}

PostedPriceMix Decompose(const Prior& prior, const AllocationCurve& curve) {
  if (curve.budget_capped) {
    throw Error(ErrorCode::kPropertyViolation,
                "budget-capped curve has no posted-price decomposition");
  }
  const size_t m = curve.top(), k = curve.x.cols();
  if (m != prior.num_values() || k != prior.num_levels()) {
    throw Error(ErrorCode::kBadShape, "curve does not match the prior's grid");
  }
  PostedPriceMix mix{std::vector<Rational>(curve.grid.begin() + 1,
                                           curve.grid.end()),
                     Matrix<Rational>(m, k), Rational(0)};
  for (size_t j = 0; j < k; ++j) {
    for (size_t i = 1; i <= m; ++i) {
      const Rational d = curve.x(i, j) - curve.x(i - 1, j);
      if (d.sign() < 0 || d > Rational(1)) {
        throw Error(ErrorCode::kPropertyViolation,
                    "weight outside [0,1] at price " + curve.grid[i].ToString());
      }
      mix.delta(i - 1, j) = d;
      if (d.is_zero()) continue;
      Rational tail;
      for (size_t l = i - 1; l < m; ++l) tail += prior.mass(l, j);
      mix.revenue += d * curve.grid[i] * tail;
    }
  }
  if (mix.revenue != CurveRevenue(prior, curve)) {
    throw Error(ErrorCode::kPropertyViolation,
                "revenue identity: mixture earns " + mix.revenue.ToString() +
                    ", curve earns " + CurveRevenue(prior, curve).ToString());
  }

  if (prior.mode() == Mode::kPublicBudget) {
    Rational total;
    for (size_t i = 0; i < m; ++i) total += mix.delta(i, 0);
    if (total != Rational(1)) {
      throw Error(ErrorCode::kPropertyViolation,
                  "weights sum to " + total.ToString() + ", not 1");
    }
    return mix;
  }

  const LowerEnvelope env = ComputeLowerEnvelope(prior.masses());
  for (const auto& [a, r] : env.points) {
    for (size_t j = r; j < k; ++j) {
      if (mix.delta(a, j) != mix.delta(a, r)) {
        throw Error(ErrorCode::kPropertyViolation,
                    "weight at envelope value " + prior.value(a).ToString() +
                        " differs across levels");
      }
    }
  }
  for (size_t p = 0; p + 1 < env.points.size(); ++p) {
    const auto [a, r] = env.points[p];
    const size_t b = env.points[p + 1].first;
    for (size_t i = a + 1; i < b; ++i) {
      for (size_t j = r; j < k; ++j) {
        if (!mix.delta(i, j).is_zero()) {
          throw Error(ErrorCode::kPropertyViolation,
                      "nonzero weight between envelope values at " +
                          prior.value(i).ToString());
        }
      }
    }
  }
  Rational on_envelope;
  for (const auto& [a, r] : env.points) on_envelope += mix.delta(a, k - 1);
  if (on_envelope != Rational(1)) {
    throw Error(ErrorCode::kPropertyViolation,
                "top-level weight on envelope values is " +
                    on_envelope.ToString() + ", not 1");
  }
  return mix;
}

}  // namespace seg
