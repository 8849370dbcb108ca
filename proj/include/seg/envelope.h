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

#ifndef SEG_ENVELOPE_H_
#define SEG_ENVELOPE_H_

#include <cstddef>
#include <vector>

#include "seg/matrix.h"
#include "seg/prior.h"
#include "seg/rational.h"

namespace seg {

struct EqualRevenueDist {
  std::vector<Rational> values;  // strictly increasing
  std::vector<Rational> probs;
};

// Distribution on `support` under which every value earns the same revenue
// as a posted price: w * Pr[value >= w] = min(support). Throws
// Error(kBadSupport) unless the support is nonempty, positive and strictly
// increasing.
EqualRevenueDist EqualRevenue(std::vector<Rational> support);

// Staircase of types that no type at a later level undercuts.
//
// cuts[j] (0 <= j <= k) counts the leading values that carry no mass at any
// level >= j; cuts[k] = n. A type (i, j) with mass lies on the envelope iff
// cuts[j] <= i < cuts[j + 1]. Levels without mass impose nothing.
struct LowerEnvelope {
  std::vector<size_t> cuts;
  // Sorted by value; levels are nondecreasing along the list.
  std::vector<TypeIndex> points;
};

// `mass` need not be normalized. Throws Error(kEmptySupport) when all zero.
LowerEnvelope ComputeLowerEnvelope(const MassMatrix& mass);

// Adjacent envelope points in value order.
std::vector<std::pair<TypeIndex, TypeIndex>> ConsecutivePairs(
    const LowerEnvelope& env);

// Equal-revenue distribution over the envelope values, each value placed at
// its envelope level. Returned on the grid of `values` x mass.cols().
MassMatrix EnvelopeSignal(const std::vector<Rational>& values,
                          const MassMatrix& mass);

}  // namespace seg

#endif  // SEG_ENVELOPE_H_
