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

#include <gmpxx.h>

#include <cstddef>
#include <limits>
#include <vector>

#include "seg/error.h"
#include "seg/lp.h"

namespace seg {

size_t LinearProgram::AddVariable(std::string name, Rational cost) {
  variable_names.push_back(std::move(name));
  objective.push_back(std::move(cost));
  for (LinearConstraint& c : constraints) c.coeffs.emplace_back();
  return objective.size() - 1;
}

LinearConstraint& LinearProgram::AddConstraint(Relation relation, Rational rhs,
                                               std::string name) {
  constraints.push_back({std::vector<Rational>(num_variables()), relation,
                         std::move(rhs), std::move(name)});
  return constraints.back();
}

Rational Evaluate(const std::vector<Rational>& coeffs,
                  const std::vector<Rational>& x) {
  Rational s;
  for (size_t j = 0; j < coeffs.size(); ++j) {
    if (!coeffs[j].is_zero()) s += coeffs[j] * x[j];
  }
  return s;
}

bool IsFeasible(const LinearProgram& lp, const std::vector<Rational>& x) {
  if (x.size() != lp.num_variables()) return false;
  for (const Rational& v : x) {
    if (v.sign() < 0) return false;
  }
  for (const LinearConstraint& c : lp.constraints) {
    const Rational lhs = Evaluate(c.coeffs, x);
    switch (c.relation) {
      case Relation::kLessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::kGreaterEqual:
        if (lhs < c.rhs) return false;
        break;
      case Relation::kEqual:
        if (lhs != c.rhs) return false;
        break;
    }
  }
  return true;
}

namespace {

// Dense tableau. Row 0 holds reduced costs for a maximization; the last
// column is the right-hand side.
class Tableau {
 public:
  Tableau(size_t rows, size_t cols)
      : cols_(cols),
        a_(rows + 1, std::vector<mpq_class>(cols + 1)),
        basis_(rows + 1, kNone),
        allowed_(cols, true) {}

  mpq_class& at(size_t r, size_t c) { return a_[r][c]; }
  mpq_class& rhs(size_t r) { return a_[r][cols_]; }
  size_t rows() const { return a_.size() - 1; }
  size_t basis(size_t r) const { return basis_[r]; }
  void set_basis(size_t r, size_t c) { basis_[r] = c; }
  void forbid(size_t c) { allowed_[c] = false; }

  // Puts `cost` into row 0 and prices out the current basis.
  void SetObjective(const std::vector<mpq_class>& cost) {
    for (size_t c = 0; c < cols_; ++c) a_[0][c] = -cost[c];
    a_[0][cols_] = 0;
    for (size_t r = 1; r < a_.size(); ++r) {
      const mpq_class f = a_[0][basis_[r]];
      if (sgn(f) == 0) continue;
      for (size_t c = 0; c <= cols_; ++c) {
        if (sgn(a_[r][c]) != 0) a_[0][c] -= f * a_[r][c];
      }
    }
  }

  void Pivot(size_t r, size_t c) {
    std::vector<mpq_class>& prow = a_[r];
    if (prow[c] != 1) {
      const mpq_class inv = 1 / prow[c];
      for (size_t k = 0; k <= cols_; ++k) {
        if (sgn(prow[k]) != 0) prow[k] *= inv;
      }
    }
    nonzero_.clear();
    for (size_t k = 0; k <= cols_; ++k) {
      if (sgn(prow[k]) != 0) nonzero_.push_back(k);
    }
    for (size_t i = 0; i < a_.size(); ++i) {
      if (i == r || sgn(a_[i][c]) == 0) continue;
      std::vector<mpq_class>& row = a_[i];
      factor_ = row[c];
      for (size_t k : nonzero_) {
        mpq_mul(tmp_.get_mpq_t(), factor_.get_mpq_t(), prow[k].get_mpq_t());
        mpq_sub(row[k].get_mpq_t(), row[k].get_mpq_t(), tmp_.get_mpq_t());
      }
    }
    basis_[r] = c;
  }

  // Bland's rule: lowest-index improving column, ties in the ratio test to
  // the lowest basic index. Returns false when the objective is unbounded.
  bool Optimize() {
    while (true) {
      size_t enter = kNone;
      for (size_t c = 0; c < cols_; ++c) {
        if (allowed_[c] && sgn(a_[0][c]) < 0) {
          enter = c;
          break;
        }
      }
      if (enter == kNone) return true;

      size_t leave = kNone;
      for (size_t r = 1; r < a_.size(); ++r) {
        if (sgn(a_[r][enter]) <= 0) continue;
        if (leave == kNone) {
          leave = r;
          continue;
        }
        // Compare rhs_r / a_r against rhs_leave / a_leave.
        const int c = cmp(a_[r][cols_] * a_[leave][enter],
                          a_[leave][cols_] * a_[r][enter]);
        if (c < 0 || (c == 0 && basis_[r] < basis_[leave])) leave = r;
      }
      if (leave == kNone) return false;
      Pivot(leave, enter);
    }
  }

  void RemoveRow(size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  static constexpr size_t kNone = std::numeric_limits<size_t>::max();

 private:
  size_t cols_;
  std::vector<std::vector<mpq_class>> a_;
  std::vector<size_t> basis_;
  std::vector<bool> allowed_;
  std::vector<size_t> nonzero_;
  mpq_class factor_, tmp_;
};

struct StdRow {
  std::vector<mpq_class> coeffs;
  Relation relation;
  mpq_class rhs;
};

// Sign-normalizes each row so the slack basis is feasible wherever possible
// and drops rows that nonnegativity already implies.
std::vector<StdRow> Presolve(const LinearProgram& lp) {
  const size_t n = lp.num_variables();
  std::vector<StdRow> out;
  for (const LinearConstraint& c : lp.constraints) {
    if (c.coeffs.size() != n) {
      throw Error(ErrorCode::kBadShape, "constraint width mismatch");
    }
    StdRow row{std::vector<mpq_class>(n), c.relation, c.rhs.mpq()};
    bool any_pos = false, any_neg = false;
    for (size_t j = 0; j < n; ++j) {
      row.coeffs[j] = c.coeffs[j].mpq();
      any_pos |= sgn(row.coeffs[j]) > 0;
      any_neg |= sgn(row.coeffs[j]) < 0;
    }
    const int rhs_sign = sgn(row.rhs);
    if (!any_pos && !any_neg) {
      const bool ok = (c.relation == Relation::kLessEqual && rhs_sign >= 0) ||
                      (c.relation == Relation::kGreaterEqual && rhs_sign <= 0) ||
                      (c.relation == Relation::kEqual && rhs_sign == 0);
      if (!ok) throw Error(ErrorCode::kInfeasible, "empty row " + c.name);
      continue;
    }
    if ((c.relation == Relation::kGreaterEqual && rhs_sign <= 0 && !any_neg) ||
        (c.relation == Relation::kLessEqual && rhs_sign >= 0 && !any_pos)) {
      continue;
    }
    const bool flip =
        rhs_sign < 0 ||
        (rhs_sign == 0 && c.relation == Relation::kGreaterEqual);
    if (flip) {
      for (mpq_class& v : row.coeffs) v = -v;
      row.rhs = -row.rhs;
      if (row.relation == Relation::kLessEqual) {
        row.relation = Relation::kGreaterEqual;
      } else if (row.relation == Relation::kGreaterEqual) {
        row.relation = Relation::kLessEqual;
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

LpSolution SolveLpExact(const LinearProgram& lp) {
  const size_t n = lp.num_variables();
  const std::vector<StdRow> rows = Presolve(lp);
  const size_t m = rows.size();

  size_t extra = 0, artificials = 0;
  for (const StdRow& r : rows) {
    if (r.relation == Relation::kLessEqual) {
      ++extra;
    } else if (r.relation == Relation::kGreaterEqual) {
      extra += 2;
      ++artificials;
    } else {
      ++extra;
      ++artificials;
    }
  }
  const size_t cols = n + extra;
  Tableau t(m, cols);
  std::vector<bool> is_artificial(cols, false);
  size_t next = n;
  for (size_t r = 0; r < m; ++r) {
    const StdRow& row = rows[r];
    for (size_t j = 0; j < n; ++j) t.at(r + 1, j) = row.coeffs[j];
    t.rhs(r + 1) = row.rhs;
    if (row.relation == Relation::kLessEqual) {
      t.at(r + 1, next) = 1;
      t.set_basis(r + 1, next++);
    } else if (row.relation == Relation::kGreaterEqual) {
      t.at(r + 1, next++) = -1;
      t.at(r + 1, next) = 1;
      is_artificial[next] = true;
      t.set_basis(r + 1, next++);
    } else {
      t.at(r + 1, next) = 1;
      is_artificial[next] = true;
      t.set_basis(r + 1, next++);
    }
  }

  if (artificials > 0) {
    std::vector<mpq_class> phase1(cols);
    for (size_t c = 0; c < cols; ++c) {
      if (is_artificial[c]) phase1[c] = -1;
    }
    t.SetObjective(phase1);
    t.Optimize();
    if (sgn(t.rhs(0)) != 0) {
      throw Error(ErrorCode::kInfeasible, "phase one optimum is negative");
    }
    // Drive zero-valued artificials out of the basis; rows where that is
    // impossible are redundant.
    for (size_t r = t.rows(); r >= 1; --r) {
      if (!is_artificial[t.basis(r)]) continue;
      size_t enter = Tableau::kNone;
      for (size_t c = 0; c < cols; ++c) {
        if (!is_artificial[c] && sgn(t.at(r, c)) != 0) {
          enter = c;
          break;
        }
      }
      if (enter == Tableau::kNone) {
        t.RemoveRow(r);
      } else {
        t.Pivot(r, enter);
      }
    }
    for (size_t c = 0; c < cols; ++c) {
      if (is_artificial[c]) t.forbid(c);
    }
  }

  std::vector<mpq_class> cost(cols);
  for (size_t j = 0; j < n; ++j) cost[j] = lp.objective[j].mpq();
  t.SetObjective(cost);
  if (!t.Optimize()) throw Error(ErrorCode::kUnbounded, "objective unbounded");

  LpSolution sol;
  sol.x.assign(n, Rational(0));
  for (size_t r = 1; r <= t.rows(); ++r) {
    if (t.basis(r) < n) sol.x[t.basis(r)] = Rational(t.rhs(r));
  }
  sol.objective = Evaluate(lp.objective, sol.x);
  return sol;
}

}  // namespace seg
