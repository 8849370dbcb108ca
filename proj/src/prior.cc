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

#include "seg/prior.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "seg/error.h"

namespace seg {

std::string_view ModeName(Mode mode) {
  switch (mode) {
    case Mode::kPublicBudget: return "public-budget";
    case Mode::kDeadlines: return "deadlines";
    case Mode::kPrivateBudget: return "private-budget";
  }
  return "unknown";
}

Mode ParseMode(std::string_view name) {
  if (name == "public-budget" || name == "public") return Mode::kPublicBudget;
  if (name == "deadlines") return Mode::kDeadlines;
  if (name == "private-budget" || name == "private") {
    return Mode::kPrivateBudget;
  }
  throw Error(ErrorCode::kParse, "unknown mode '" + std::string(name) + "'");
}

namespace {

void CheckLevels(Mode mode, const std::vector<Rational>& levels) {
  if (levels.empty()) throw Error(ErrorCode::kBadShape, "no levels");
  if (mode == Mode::kPublicBudget && levels.size() != 1) {
    throw Error(ErrorCode::kBadShape, "public mode takes exactly one budget");
  }
  for (size_t j = 0; j < levels.size(); ++j) {
    if (levels[j].sign() <= 0) {
      throw Error(ErrorCode::kBadParameters,
                  "level label " + levels[j].ToString() + " is not positive");
    }
    if (mode == Mode::kDeadlines && !levels[j].is_integer()) {
      throw Error(ErrorCode::kBadParameters,
                  "deadline " + levels[j].ToString() + " is not an integer");
    }
    if (j > 0 && !(levels[j - 1] < levels[j])) {
      throw Error(ErrorCode::kBadBudgetOrder,
                  "levels must be strictly increasing");
    }
  }
}

}  // namespace

Prior::Prior(Mode mode, std::vector<Rational> values,
             std::vector<Rational> levels, MassMatrix mass)
    : mode_(mode),
      values_(std::move(values)),
      levels_(std::move(levels)),
      mass_(std::move(mass)) {
  CheckLevels(mode_, levels_);
  if (values_.empty()) throw Error(ErrorCode::kEmptySupport, "no values");
  if (mass_.rows() != values_.size() || mass_.cols() != levels_.size()) {
    throw Error(ErrorCode::kBadShape, "mass matrix does not match the grid");
  }
  for (size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].sign() <= 0) {
      throw Error(ErrorCode::kNonPositiveValue,
                  "value " + values_[i].ToString() + " is not positive");
    }
    if (i > 0 && !(values_[i - 1] < values_[i])) {
      throw Error(ErrorCode::kBadShape, "values must be strictly increasing");
    }
  }
  Rational total;
  for (const Rational& m : mass_.data()) {
    if (m.sign() < 0) {
      throw Error(ErrorCode::kNegativeMass, "mass " + m.ToString());
    }
    total += m;
  }
  if (total != Rational(1)) {
    throw Error(ErrorCode::kEmptySupport,
                "masses sum to " + total.ToString() + ", not 1");
  }
}

const Rational& Prior::budget() const {
  if (mode_ != Mode::kPublicBudget) {
    throw Error(ErrorCode::kWrongMode, "budget() needs a public-budget prior");
  }
  return levels_[0];
}

Rational Prior::LevelMass(size_t j) const {
  if (j >= levels_.size()) {
    throw Error(ErrorCode::kLevelOutOfRange, "level " + std::to_string(j));
  }
  Rational s;
  for (size_t i = 0; i < values_.size(); ++i) s += mass_(i, j);
  return s;
}

Rational Prior::ValueMass(size_t i) const {
  Rational s;
  for (size_t j = 0; j < levels_.size(); ++j) s += mass_(i, j);
  return s;
}

std::vector<Rational> Prior::Marginal(size_t j) const {
  const Rational total = LevelMass(j);
  if (total.is_zero()) return {};
  std::vector<Rational> out(values_.size());
  for (size_t i = 0; i < values_.size(); ++i) out[i] = mass_(i, j) / total;
  return out;
}

Rational Prior::TailMass(const Rational& v) const {
  Rational s;
  for (size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] >= v) s += ValueMass(i);
  }
  return s;
}

Rational Prior::TailMass(const Rational& v, size_t j) const {
  const Rational total = LevelMass(j);
  if (total.is_zero()) return Rational(0);
  Rational s;
  for (size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] >= v) s += mass_(i, j);
  }
  return s / total;
}

Rational Prior::FullWelfare() const {
  Rational s;
  for (size_t i = 0; i < values_.size(); ++i) s += values_[i] * ValueMass(i);
  return s;
}

Rational Prior::MinValue() const {
  for (size_t i = 0; i < values_.size(); ++i) {
    if (!ValueMass(i).is_zero()) return values_[i];
  }
  throw Error(ErrorCode::kEmptySupport, "no value carries mass");
}

std::optional<Rational> Prior::MinValue(size_t j) const {
  if (j >= levels_.size()) {
    throw Error(ErrorCode::kLevelOutOfRange, "level " + std::to_string(j));
  }
  for (size_t i = 0; i < values_.size(); ++i) {
    if (!mass_(i, j).is_zero()) return values_[i];
  }
  return std::nullopt;
}

std::vector<TypeIndex> Prior::Support() const {
  std::vector<TypeIndex> out;
  for (size_t i = 0; i < values_.size(); ++i) {
    for (size_t j = 0; j < levels_.size(); ++j) {
      if (!mass_(i, j).is_zero()) out.emplace_back(i, j);
    }
  }
  return out;
}

bool Prior::IsNormalized() const {
  for (size_t i = 0; i < values_.size(); ++i) {
    if (ValueMass(i).is_zero()) return false;
  }
  if (mode_ == Mode::kPublicBudget) return true;
  for (size_t j = 0; j < levels_.size(); ++j) {
    if (LevelMass(j).is_zero()) return false;
  }
  return true;
}

Prior NormalizePrior(const RawPrior& raw) {
  CheckLevels(raw.mode, raw.levels);
  std::map<Rational, std::map<size_t, Rational>> merged;
  Rational total;
  for (const TypeMass& t : raw.types) {
    if (t.value.sign() <= 0) {
      throw Error(ErrorCode::kNonPositiveValue,
                  "value " + t.value.ToString() + " is not positive");
    }
    if (t.level >= raw.levels.size()) {
      throw Error(ErrorCode::kLevelOutOfRange,
                  "level index " + std::to_string(t.level));
    }
    if (t.mass.sign() < 0) {
      throw Error(ErrorCode::kNegativeMass, "mass " + t.mass.ToString());
    }
    if (t.mass.is_zero()) continue;
    merged[t.value][t.level] += t.mass;
    total += t.mass;
  }
  if (total.is_zero()) throw Error(ErrorCode::kEmptySupport, "no mass");

  std::vector<size_t> kept_levels;
  if (raw.mode == Mode::kPublicBudget) {
    kept_levels.push_back(0);
  } else {
    std::set<size_t> used;
    for (const auto& [v, row] : merged) {
      for (const auto& [j, m] : row) used.insert(j);
    }
    kept_levels.assign(used.begin(), used.end());
  }
  std::vector<Rational> levels;
  std::map<size_t, size_t> remap;
  for (size_t j : kept_levels) {
    remap[j] = levels.size();
    levels.push_back(raw.levels[j]);
  }
  std::vector<Rational> values;
  MassMatrix mass(merged.size(), levels.size());
  for (const auto& [v, row] : merged) {
    for (const auto& [j, m] : row) mass(values.size(), remap.at(j)) = m / total;
    values.push_back(v);
  }
  return Prior(raw.mode, std::move(values), std::move(levels),
               std::move(mass));
}

Prior NormalizePrior(const Prior& prior) {
  RawPrior raw{prior.mode(), prior.levels(), {}};
  for (const auto& [i, j] : prior.Support()) {
    raw.types.push_back({prior.value(i), j, prior.mass(i, j)});
  }
  return NormalizePrior(raw);
}

std::vector<Rational> DeadlineLabels(size_t k) {
  std::vector<Rational> out;
  for (size_t d = 1; d <= k; ++d) out.emplace_back(static_cast<int64_t>(d));
  return out;
}

}  // namespace seg
