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

#ifndef SEG_SCHEME_H_
#define SEG_SCHEME_H_

#include <vector>

#include "seg/prior.h"
#include "seg/rational.h"

namespace seg {

// A posterior together with its probability of being sent. The posterior
// lives on the parent's grid.
struct Signal {
  Rational weight;
  Prior posterior;

  friend bool operator==(const Signal&, const Signal&) = default;
};

// Types whose residual mass hit zero at time t.
struct ExhaustionEvent {
  Rational time;
  std::vector<TypeIndex> exhausted;

  friend bool operator==(const ExhaustionEvent&,
                         const ExhaustionEvent&) = default;
};

struct SignalingScheme {
  Prior parent;
  std::vector<Signal> signals;
  // Filled by the segmentation process; empty for hand-built schemes.
  std::vector<ExhaustionEvent> events;

  friend bool operator==(const SignalingScheme&,
                         const SignalingScheme&) = default;
};

struct SurplusReport {
  Rational revenue;
  Rational welfare;
  Rational consumer_surplus;
  Rational full_welfare;
  // full_welfare - revenue.
  Rational opt;

  friend bool operator==(const SurplusReport&, const SurplusReport&) = default;
};

// Seller's response to one signal.
struct SignalOutcome {
  Rational price;
  Rational revenue;
  Rational welfare;
  Rational consumer_surplus;

  friend bool operator==(const SignalOutcome&, const SignalOutcome&) = default;
};

struct AnnotatedScheme {
  SignalingScheme scheme;
  std::vector<SignalOutcome> outcomes;
  SurplusReport totals;

  friend bool operator==(const AnnotatedScheme&,
                         const AnnotatedScheme&) = default;
};

}  // namespace seg

#endif  // SEG_SCHEME_H_
