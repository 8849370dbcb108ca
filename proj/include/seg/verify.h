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

#ifndef SEG_VERIFY_H_
#define SEG_VERIFY_H_

#include <string>
#include <vector>

#include "seg/prior.h"
#include "seg/scheme.h"

namespace seg {

// One named exact comparison "lhs relation rhs"; `detail` locates a
// failure.
struct Check {
  std::string name;
  bool passed = false;
  std::string lhs;
  std::string relation;
  std::string rhs;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;

  bool passed() const;
  void Add(std::string name, bool passed, std::string lhs = "",
           std::string rhs = "", std::string detail = "",
           std::string relation = "==");
  void Append(const VerificationReport& other);
  // One line per check, "PASS name: lhs == rhs" or "FAIL name: ...".
  std::string ToString() const;
};

// Positive weights summing to one, posteriors on the parent's grid, and
// sum_h w_h S_h equal to the parent cell by cell.
VerificationReport CheckBayesPlausibility(const SignalingScheme& scheme);

// Scheme revenue equals R(prior), welfare equals W*(prior), consumer
// surplus equals W* - R(prior), and every signal's price sells to its
// whole support.
VerificationReport CheckBuyerOptimality(const Prior& prior,
                                        const AnnotatedScheme& scheme);

// The posterior's value marginal is equal-revenue, and its LP optimum
// equals its posted-price revenue. Fails instead of throwing when the
// posted-price rule does not apply to the posterior.
VerificationReport CrossCheckSignal(const Prior& posterior);

// sum_h w_h R(S_h) >= R(parent), with each R(S_h) from the LP.
VerificationReport CheckSellerFloor(const SignalingScheme& scheme);

// Public mode only: the initial optimal menu stays revenue-optimal for
// every residual prior the segmentation passes through. Throws
// Error(kWrongMode) otherwise.
VerificationReport CheckPublicMenuPersistence(const Prior& prior);

// Plausibility, posted-price annotation, buyer optimality and the
// per-signal cross-checks.
VerificationReport VerifyScheme(const SignalingScheme& scheme);

}  // namespace seg

#endif  // SEG_VERIFY_H_
