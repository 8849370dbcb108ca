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

#ifndef SEG_PRIVATE_BUDGET_H_
#define SEG_PRIVATE_BUDGET_H_

#include "seg/auction.h"
#include "seg/prior.h"
#include "seg/scheme.h"
#include "seg/verify.h"

namespace seg {

// Two-type private-budget prior: (value 1, budget 1 - delta) with mass
// 1 - delta and (value M, budget M) with mass delta.
struct CounterexampleInstance {
  Rational M;
  Rational delta;
  Prior prior;
};

// Requires M > 1 and 0 < delta < 1/M; throws Error(kBadParameters).
CounterexampleInstance MakeCounterexample(const Rational& M,
                                          const Rational& delta);

struct ClosedFormAuction {
  AuctionMenu menu;
  SurplusReport report;
  Rational lp_revenue;
};

// Menu (1 - delta, 1 - delta) for the low type and (delta M + 1 - delta, 1)
// for the high type; zero-mass cells copy the option their type prefers.
// Revenue 1 - delta + delta^2 M. Throws Error(kNotOptimal) if the LP
// disagrees.
ClosedFormAuction ClosedFormOptimal(const CounterexampleInstance& inst);

// Seller's reaction to one signal holding mass g1 of the low type and g2 of
// the high type (unnormalized), via the welfare tie-broken LP.
struct SignalCase {
  Rational revenue;
  Rational welfare;
  Rational consumer_surplus;  // per unit of signal weight
  Rational low_payment;
  Rational low_allocation;
};
SignalCase AnalyzeSignal(const CounterexampleInstance& inst, const Rational& g1,
                         const Rational& g2);

// Largest consumer surplus of an efficient scheme, (1 - delta) delta, checked
// against the separating scheme's LPs and against OPT / M. Throws
// Error(kNotOptimal) on a mismatch.
Rational EfficientSchemeCs(const CounterexampleInstance& inst);

struct SchemeWeights {
  Rational g11, g22, g31, g32;
};

struct MaxCsResult {
  SchemeWeights weights;
  Rational surplus;
};

// Surplus-maximizing scheme over pure-low, pure-high and mixed signals that
// keep the parent menu (mixed signals that lose it are pruned up front).
// Only M = 2; throws Error(kWrongM). `separate` pins g32 = 0.
MaxCsResult MaxCsScheme(const CounterexampleInstance& inst,
                        bool separate = false);

// For 0 < epsilon < 1/2: the efficient-scheme bound on (M, delta) =
// (1/epsilon, epsilon/2) and the max-surplus bound on (2, 1/2 - epsilon/2).
// Throws Error(kBadEpsilon).
VerificationReport GapReport(const Rational& epsilon);

}  // namespace seg

#endif  // SEG_PRIVATE_BUDGET_H_
