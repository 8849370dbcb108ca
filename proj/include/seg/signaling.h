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

#ifndef SEG_SIGNALING_H_
#define SEG_SIGNALING_H_

#include <vector>

#include "seg/matrix.h"
#include "seg/prior.h"
#include "seg/scheme.h"

namespace seg {

// Remaining mass F(t) while signals are peeled off the prior. At every
// moment total(residual) = 1 - time.
struct ResidualState {
  Prior parent;
  Rational time;
  MassMatrix residual;
  MassMatrix rate;  // posterior emitted by the current interval
  std::vector<ExhaustionEvent> events;
};

// Throws Error(kWrongMode) for private budgets. Normalizes the prior.
ResidualState InitResidual(const Prior& prior);

bool IsExhausted(const ResidualState& state);

// Emits the next signal: the envelope posterior of the residual (equal
// revenue over its support in public mode; the budget plays no part),
// weighted by the time until the first type runs out. Types that run out
// together form one event. Throws Error(kExhausted) when nothing is left.
Signal SegmentStep(ResidualState& state);

// Runs SegmentStep to exhaustion. The result is Bayes-plausible exactly.
SignalingScheme Segment(const Prior& prior);

// t_0 = 0 < t_1 < ... < t_H = 1 from the scheme's event log.
std::vector<Rational> CumulativeTimes(const SignalingScheme& scheme);

// Baseline for deadlines: segments each level's conditional distribution on
// its own, ignoring the other levels. Throws Error(kWrongMode) otherwise.
SignalingScheme NaivePerLevelScheme(const Prior& prior);

}  // namespace seg

#endif  // SEG_SIGNALING_H_
