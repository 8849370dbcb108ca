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

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "seg/error.h"
#include "seg/lp.h"

namespace seg {
namespace {

// One hyperplane a . x = b.
struct Hyperplane {
  std::vector<Rational> a;
  Rational b;
};

// Reduced row echelon form over the chosen hyperplanes. pivots[r] is the
// column that row r eliminates from every other row.
struct Echelon {
  std::vector<Hyperplane> rows;
  std::vector<size_t> pivots;

  // Adds h if it is independent of the current rows.
  bool Add(Hyperplane h) {
    for (size_t r = 0; r < rows.size(); ++r) {
      const Rational f = h.a[pivots[r]];
      if (f.is_zero()) continue;
      for (size_t c = 0; c < h.a.size(); ++c) {
        if (!rows[r].a[c].is_zero()) h.a[c] -= f * rows[r].a[c];
      }
      h.b -= f * rows[r].b;
    }
    size_t p = 0;
    while (p < h.a.size() && h.a[p].is_zero()) ++p;
    if (p == h.a.size()) return false;
    const Rational inv = Rational(1) / h.a[p];
    for (Rational& v : h.a) v *= inv;
    h.b *= inv;
    for (Hyperplane& row : rows) {
      const Rational f = row.a[p];
      if (f.is_zero()) continue;
      for (size_t c = 0; c < row.a.size(); ++c) {
        if (!h.a[c].is_zero()) row.a[c] -= f * h.a[c];
      }
      row.b -= f * h.b;
    }
    rows.push_back(std::move(h));
    pivots.push_back(p);
    return true;
  }

  // With full rank every row reads x_pivot = b.
  std::vector<Rational> Solve(size_t n) const {
    std::vector<Rational> x(n);
    for (size_t r = 0; r < rows.size(); ++r) x[pivots[r]] = rows[r].b;
    return x;
  }
};

// Scales h so its first nonzero coefficient is 1.
Hyperplane Scaled(Hyperplane h) {
  auto lead = std::find_if(h.a.begin(), h.a.end(),
                           [](const Rational& v) { return !v.is_zero(); });
  const Rational inv = Rational(1) / *lead;
  for (Rational& v : h.a) v *= inv;
  h.b *= inv;
  return h;
}

void AddUnique(std::vector<Hyperplane>& out, Hyperplane h) {
  h = Scaled(std::move(h));
  for (const Hyperplane& g : out) {
    if (g.a == h.a && g.b == h.b) return;
  }
  out.push_back(std::move(h));
}

class Enumerator {
 public:
  Enumerator(const LinearProgram& lp, std::vector<Hyperplane> candidates)
      : lp_(lp), candidates_(std::move(candidates)) {}

  void Run(const Echelon& start) { Visit(start, 0); }

  const std::optional<LpSolution>& best() const { return best_; }

 private:
  void Visit(const Echelon& e, size_t from) {
    const size_t n = lp_.num_variables();
    if (e.rows.size() == n) {
      std::vector<Rational> x = e.Solve(n);
      if (!IsFeasible(lp_, x)) return;
      Rational value = Evaluate(lp_.objective, x);
      if (!best_ || value > best_->objective) {
        best_ = LpSolution{std::move(value), std::move(x)};
      }
      return;
    }
    const size_t need = n - e.rows.size();
    for (size_t i = from; i + need <= candidates_.size(); ++i) {
      Echelon next = e;
      if (next.Add(candidates_[i])) Visit(next, i + 1);
    }
  }

  const LinearProgram& lp_;
  std::vector<Hyperplane> candidates_;
  std::optional<LpSolution> best_;
};

}  // namespace

LpSolution VertexOracle(const LinearProgram& lp, size_t max_variables) {
  const size_t n = lp.num_variables();
  if (n > max_variables) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(n) + " variables exceeds the oracle limit of " +
                    std::to_string(max_variables));
  }
  if (n == 0) return LpSolution{Rational(0), {}};

  Echelon forced;
  std::vector<Hyperplane> candidates;
  for (const LinearConstraint& c : lp.constraints) {
    Hyperplane h{c.coeffs, c.rhs};
    const bool zero = std::all_of(c.coeffs.begin(), c.coeffs.end(),
                                  [](const Rational& v) { return v.is_zero(); });
    if (zero) continue;
    if (c.relation == Relation::kEqual) {
      // Dependent equalities are either redundant or contradictory; the
      // feasibility test on each vertex sorts that out.
      forced.Add(std::move(h));
    } else {
      AddUnique(candidates, std::move(h));
    }
  }
  for (size_t j = 0; j < n; ++j) {
    Hyperplane h{std::vector<Rational>(n), Rational(0)};
    h.a[j] = Rational(1);
    AddUnique(candidates, std::move(h));
  }

  Enumerator en(lp, std::move(candidates));
  en.Run(forced);
  if (!en.best()) throw Error(ErrorCode::kInfeasible, "no feasible vertex");
  return *en.best();
}

}  // namespace seg
