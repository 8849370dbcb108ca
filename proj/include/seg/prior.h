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

#ifndef SEG_PRIOR_H_
#define SEG_PRIOR_H_

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "seg/matrix.h"
#include "seg/rational.h"

namespace seg {

enum class Mode { kPublicBudget, kDeadlines, kPrivateBudget };

std::string_view ModeName(Mode mode);
// Accepts the names produced by ModeName. Throws Error(kParse).
Mode ParseMode(std::string_view name);

// A buyer type is a (value index, level index) pair.
using TypeIndex = std::pair<size_t, size_t>;

// Finite distribution over (value, level) types on a sorted grid.
//
// Levels are the single public budget, the deadline labels, or the private
// budgets, depending on the mode. All indices are zero-based. Cells may hold
// zero mass (posteriors share their parent's grid); use NormalizePrior to
// strip them.
class Prior {
 public:
  // Throws Error on a malformed grid: kBadShape, kNonPositiveValue,
  // kBadBudgetOrder, kNegativeMass, or kEmptySupport when the masses do not
  // sum to one.
  Prior(Mode mode, std::vector<Rational> values, std::vector<Rational> levels,
        MassMatrix mass);

  Mode mode() const { return mode_; }
  size_t num_values() const { return values_.size(); }
  size_t num_levels() const { return levels_.size(); }

  const std::vector<Rational>& values() const { return values_; }
  const Rational& value(size_t i) const { return values_[i]; }
  const std::vector<Rational>& levels() const { return levels_; }
  const Rational& level(size_t j) const { return levels_[j]; }
  const MassMatrix& masses() const { return mass_; }
  const Rational& mass(size_t i, size_t j) const { return mass_(i, j); }

  // The public budget. Throws Error(kWrongMode) outside public mode.
  const Rational& budget() const;

  // Pr[level = j]. Throws Error(kLevelOutOfRange).
  Rational LevelMass(size_t j) const;
  // Pr[value = v_i].
  Rational ValueMass(size_t i) const;

  // Conditional value distribution at level j, indexed like values().
  // Empty when the level carries no mass.
  std::vector<Rational> Marginal(size_t j) const;

  // Pr[value >= v].
  Rational TailMass(const Rational& v) const;
  // Pr[value >= v | level = j]; zero when the level carries no mass.
  Rational TailMass(const Rational& v, size_t j) const;

  // Expected value, the welfare of allocating to every type.
  Rational FullWelfare() const;

  // Smallest value with positive mass.
  Rational MinValue() const;
  std::optional<Rational> MinValue(size_t j) const;

  // Types with positive mass, ordered by value then level.
  std::vector<TypeIndex> Support() const;

  // True when every value row and every level column carries mass.
  bool IsNormalized() const;

  friend bool operator==(const Prior& a, const Prior& b) = default;

 private:
  Mode mode_;
  std::vector<Rational> values_;
  std::vector<Rational> levels_;
  MassMatrix mass_;
};

struct TypeMass {
  Rational value;
  size_t level = 0;
  Rational mass;
};

// Unnormalized input: a declared level list and a bag of (value, level,
// mass) entries that may repeat, be unsorted, or not sum to one.
struct RawPrior {
  Mode mode = Mode::kDeadlines;
  std::vector<Rational> levels;
  std::vector<TypeMass> types;
};

// Merges duplicates, drops zero-mass values and levels, rescales to one and
// sorts. Level labels survive the stripping. Public priors keep their single
// budget level.
Prior NormalizePrior(const RawPrior& raw);
Prior NormalizePrior(const Prior& prior);

// Deadline labels 1..k.
std::vector<Rational> DeadlineLabels(size_t k);

}  // namespace seg

#endif  // SEG_PRIOR_H_
