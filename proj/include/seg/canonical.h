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

#ifndef SEG_CANONICAL_H_
#define SEG_CANONICAL_H_

#include <optional>
#include <string>
#include <vector>

#include "seg/auction.h"
#include "seg/matrix.h"
#include "seg/prior.h"

namespace seg {

// Piecewise-constant allocation per level on the grid 0 = w_0 < w_1 < ... <
// w_m, where w_1..w_m are the prior's values. Row i of `x` is the
// allocation on [w_i, w_{i+1}) (row m extends to infinity).
struct AllocationCurve {
  std::vector<Rational> grid;
  Matrix<Rational> x;
  // Public budget at or below the lowest value: the curve is the plain
  // posted price b and has no posted-price decomposition.
  bool budget_capped = false;

  size_t top() const { return grid.size() - 1; }
  // Integral of level j's curve over [0, w_i].
  Rational Area(size_t i, size_t j) const;
  // Integral over [w_a, w_b].
  Rational Area(size_t a, size_t b, size_t j) const;
  // Payment identity: w_i x_ij - Area(w_i, j).
  Rational Payment(size_t i, size_t j) const;
};

// Expected payment of the curve's direct mechanism under the prior.
Rational CurveRevenue(const Prior& prior, const AllocationCurve& curve);

// Curve whose area at each value equals the menu's utility there. Needs
// an IC/IR menu on the prior's grid; payments weakly rise.
AllocationCurve CurveFromMenu(const Prior& prior, const AuctionMenu& menu);

// First failure among: values in [0,1], monotone per level, area ordering
// across adjacent levels, IR at w_0, and (public) the budget at the top.
std::optional<std::string> FindCurveViolation(const Prior& prior,
                                              const AllocationCurve& curve);

// Averaging, then shift to x_m = 1, then the tangent from (w_1, 0) that
// zeroes x_0. With b <= v_min returns the posted-b curve flagged
// budget_capped. Throws Error(kNotOptimal) if the menu is not
// revenue-optimal or the revenue moves, and Error(kICViolation) if the menu
// or an intermediate curve is infeasible.
AllocationCurve CanonicalizePublic(const Prior& prior, const AuctionMenu& menu);

// Averaging, zeroing x_01, the Align sweeps, flattening between envelope
// points, and x = 1 from the top envelope point. Same errors as the public
// version, plus Error(kPropertyViolation).
AllocationCurve CanonicalizeDeadlines(const Prior& prior,
                                      const AuctionMenu& menu);

// Names of the failed structural properties of a canonical deadlines curve
// (x_0j = 0; agreement left of envelope points; flat between envelope
// points; x_mk = 1). Public curves check x_0 = 0 and x_m = 1.
std::vector<std::string> CanonicalPropertyFailures(
    const Prior& prior, const AllocationCurve& curve);

// Mixture of posted prices: delta(i - 1, j) is the weight on price w_i at
// level j.
struct PostedPriceMix {
  std::vector<Rational> prices;
  Matrix<Rational> delta;
  // sum_j sum_i delta * w_i * Pr[value >= w_i, level j]
  Rational revenue;
};

// Differences of consecutive curve steps. Checks nonnegativity, the
// revenue identity against the curve, and the envelope conditions on the
// weights (deadlines) or that they sum to one (public). Throws
// Error(kPropertyViolation) naming the failed condition.
PostedPriceMix Decompose(const Prior& prior, const AllocationCurve& curve);

}  // namespace seg

#endif  // SEG_CANONICAL_H_
