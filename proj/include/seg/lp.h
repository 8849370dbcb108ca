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

#ifndef SEG_LP_H_
#define SEG_LP_H_

#include <cstddef>
#include <string>
#include <vector>

#include "seg/rational.h"

namespace seg {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct LinearConstraint {
  std::vector<Rational> coeffs;  // dense, one entry per variable
  Relation relation = Relation::kLessEqual;
  Rational rhs;
  std::string name;
};

// maximize objective . x  subject to constraints and x >= 0.
struct LinearProgram {
  std::vector<std::string> variable_names;
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;

  size_t num_variables() const { return objective.size(); }

  // Appends a variable with objective coefficient `cost`; pads existing rows.
  size_t AddVariable(std::string name, Rational cost = Rational(0));
  // Row with all-zero coefficients, to be filled by the caller.
  LinearConstraint& AddConstraint(Relation relation, Rational rhs,
                                  std::string name = "");
};

struct LpSolution {
  Rational objective;
  std::vector<Rational> x;
};

// Exact two-phase simplex. Throws Error(kInfeasible) or Error(kUnbounded).
LpSolution SolveLpExact(const LinearProgram& lp);

// Brute-force optimum over basic feasible solutions, for cross-checking the
// simplex on small programs. Assumes a bounded feasible region. Throws
// Error(kTooLarge) above `max_variables`, Error(kInfeasible) when no vertex
// is feasible.
LpSolution VertexOracle(const LinearProgram& lp, size_t max_variables = 12);

// True when x >= 0 satisfies every row exactly.
bool IsFeasible(const LinearProgram& lp, const std::vector<Rational>& x);

Rational Evaluate(const std::vector<Rational>& coeffs,
                  const std::vector<Rational>& x);

}  // namespace seg

#endif  // SEG_LP_H_
