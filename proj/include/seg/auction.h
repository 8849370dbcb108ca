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

#ifndef SEG_AUCTION_H_
#define SEG_AUCTION_H_

#include <cstddef>
#include <optional>
#include <string>

#include "seg/lp.h"
#include "seg/matrix.h"
#include "seg/prior.h"
#include "seg/scheme.h"

namespace seg {

// Variable positions in the mechanism LP over an n x k grid.
struct AuctionLayout {
  size_t n = 0;
  size_t k = 0;
  size_t payment(size_t i, size_t j) const { return 2 * (i * k + j); }
  size_t allocation(size_t i, size_t j) const { return 2 * (i * k + j) + 1; }
};

// Revenue-maximizing mechanism LP over the prior's full grid.
//
// Rows: same-level IC for every ordered pair of values (including the
// trivial i = i' rows), IC against the adjacent lower level, IR, 0 <= x <= 1
// as explicit rows, and p <= level budget outside deadline mode. Payments
// are nonnegative through the variable bounds.
LinearProgram BuildAuctionLp(const Prior& prior);

// Option assigned to each type, indexed like the prior's mass matrix.
struct AuctionMenu {
  Matrix<Rational> payment;
  Matrix<Rational> allocation;
};

AuctionMenu MenuFromSolution(const Prior& prior, const LpSolution& sol);

Rational MenuRevenue(const Prior& prior, const AuctionMenu& menu);
Rational MenuWelfare(const Prior& prior, const AuctionMenu& menu);

// First violated IC/IR/box/budget condition, or nullopt.
std::optional<std::string> FindMenuViolation(const Prior& prior,
                                             const AuctionMenu& menu);

struct AuctionResult {
  Prior prior;  // normalized
  AuctionMenu menu;
  SurplusReport report;
};

// Optimal revenue R(D), then the most efficient mechanism among the
// revenue-optimal ones. The prior is normalized first.
AuctionResult OptimalAuction(const Prior& prior);

// R(D) only; cheaper than OptimalAuction.
Rational OptimalRevenue(const Prior& prior);

// Seller's response to an equal-revenue posterior: one posted price that
// every type in the posterior accepts. Throws Error(kNotEqualRevenue) when
// the posterior lacks the equal-revenue shape (and, with deadlines, the
// one-level-per-value staircase), Error(kWrongMode) for private budgets.
SignalOutcome SignalPostedPrice(const Prior& posterior);

// price * Pr[value >= price], optionally conditional on level j.
Rational PostedPriceRevenue(const Prior& prior, const Rational& price,
                            std::optional<size_t> level = std::nullopt);

// Prices every signal with SignalPostedPrice and totals the surpluses.
AnnotatedScheme AnnotateScheme(const SignalingScheme& scheme);

}  // namespace seg

#endif  // SEG_AUCTION_H_
