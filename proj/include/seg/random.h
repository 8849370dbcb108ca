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

#ifndef SEG_RANDOM_H_
#define SEG_RANDOM_H_

#include <cstdint>
#include <random>

#include "seg/lp.h"
#include "seg/prior.h"
#include "seg/scheme.h"

namespace seg {

using Rng = std::mt19937_64;

struct PriorGenOptions {
  Mode mode = Mode::kDeadlines;
  size_t max_values = 5;
  size_t max_levels = 4;
  int64_t max_value = 20;
  int64_t max_mass = 9;
  // Chance that a grid cell is left empty.
  double zero_probability = 0.35;
};

// Distinct integer values in [1, max_value], integer masses in
// [1, max_mass] on a random subset of cells, normalized.
Prior RandomPrior(Rng& rng, const PriorGenOptions& options);

// Splits each type's mass over two or three signals by random fractions.
SignalingScheme RandomPlausibleScheme(Rng& rng, const Prior& prior);

// Bounded, feasible LP: a random point, rows it satisfies, and a cap row on
// the variable sum. Mixes <=, >= and = rows.
LinearProgram RandomBoundedLp(Rng& rng, size_t num_variables,
                              size_t num_rows);

}  // namespace seg

#endif  // SEG_RANDOM_H_
