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

// Reference timeline for the six-type deadlines prior: residual priors and
// weight-multiplied signals, in units of 1/72.

#ifndef SEG_TESTS_WORKED_EXAMPLE_H_
#define SEG_TESTS_WORKED_EXAMPLE_H_

#include <array>
#include <cstdint>
#include <vector>

#include "seg/matrix.h"
#include "seg/rational.h"

namespace seg::test {

struct Cell {
  int value;     // 1..4
  int deadline;  // 1..4
  int64_t num;   // mass * 72
};

inline const std::array<int64_t, 6> kWeights72 = {24, 6, 12, 12, 15, 3};
inline const std::array<int64_t, 6> kPrices = {1, 2, 2, 2, 2, 2};

inline const std::array<std::vector<Cell>, 6> kWeightedSignals72 = {{
    {{1, 2, 12}, {2, 2, 4}, {3, 4, 8}},
    {{2, 2, 2}, {3, 4, 4}},
    {{2, 2, 6}, {4, 3, 6}},
    {{2, 1, 4}, {3, 1, 2}, {4, 3, 6}},
    {{2, 1, 5}, {3, 1, 10}},
    {{2, 1, 3}},
}};

inline const std::array<std::vector<Cell>, 6> kResiduals72 = {{
    {{2, 1, 12}, {3, 1, 12}, {1, 2, 12}, {2, 2, 12}, {4, 3, 12}, {3, 4, 12}},
    {{2, 1, 12}, {3, 1, 12}, {2, 2, 8}, {4, 3, 12}, {3, 4, 4}},
    {{2, 1, 12}, {3, 1, 12}, {2, 2, 6}, {4, 3, 12}},
    {{2, 1, 12}, {3, 1, 12}, {4, 3, 6}},
    {{2, 1, 8}, {3, 1, 10}},
    {{2, 1, 3}},
}};

// On the 4 x 4 grid with values 1..4 and deadlines 1..4.
inline MassMatrix ToMatrix(const std::vector<Cell>& cells) {
  MassMatrix m(4, 4);
  for (const Cell& c : cells) {
    m(c.value - 1, c.deadline - 1) = Rational(c.num, 72);
  }
  return m;
}

}  // namespace seg::test

#endif  // SEG_TESTS_WORKED_EXAMPLE_H_
