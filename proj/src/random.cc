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

#include "seg/random.h"

#include <algorithm>
#include <vector>

namespace seg {
namespace {

int64_t Uniform(Rng& rng, int64_t lo, int64_t hi) {
  return std::uniform_int_distribution<int64_t>(lo, hi)(rng);
}

}  // namespace

Prior RandomPrior(Rng& rng, const PriorGenOptions& options) {
  const size_t n = static_cast<size_t>(
      Uniform(rng, 1, static_cast<int64_t>(options.max_values)));
  size_t k = 1;
  if (options.mode != Mode::kPublicBudget) {
    k = static_cast<size_t>(
        Uniform(rng, 1, static_cast<int64_t>(options.max_levels)));
  }
  std::vector<int64_t> pool(static_cast<size_t>(options.max_value));
  for (size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<int64_t>(i) + 1;
  std::shuffle(pool.begin(), pool.end(), rng);

  RawPrior raw;
  raw.mode = options.mode;
  switch (options.mode) {
    case Mode::kPublicBudget:
      raw.levels = {Rational(Uniform(rng, 1, options.max_value + 2))};
      break;
    case Mode::kDeadlines:
      raw.levels = DeadlineLabels(k);
      break;
    case Mode::kPrivateBudget: {
      std::vector<int64_t> budgets(pool.begin(), pool.end());
      std::shuffle(budgets.begin(), budgets.end(), rng);
      budgets.resize(k);
      std::sort(budgets.begin(), budgets.end());
      for (int64_t b : budgets) raw.levels.emplace_back(b);
      break;
    }
  }
  std::bernoulli_distribution empty(options.zero_probability);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < k; ++j) {
      if (empty(rng)) continue;
      raw.types.push_back(
          {Rational(pool[i]), j, Rational(Uniform(rng, 1, options.max_mass))});
    }
  }
  if (raw.types.empty()) {
    raw.types.push_back({Rational(pool[0]), static_cast<size_t>(Uniform(
                                                rng, 0, static_cast<int64_t>(k) - 1)),
                         Rational(1)});
  }
  return NormalizePrior(raw);
}

SignalingScheme RandomPlausibleScheme(Rng& rng, const Prior& prior) {
  const size_t h = static_cast<size_t>(Uniform(rng, 2, 3));
  const size_t n = prior.num_values(), k = prior.num_levels();
  std::vector<MassMatrix> parts(h, MassMatrix(n, k));
  for (const auto& [i, j] : prior.Support()) {
    std::vector<int64_t> shares(h);
    int64_t total = 0;
    while (total == 0) {
      total = 0;
      for (int64_t& s : shares) total += (s = Uniform(rng, 0, 4));
    }
    for (size_t s = 0; s < h; ++s) {
      parts[s](i, j) = prior.mass(i, j) * Rational(shares[s], total);
    }
  }
  SignalingScheme scheme{prior, {}, {}};
  for (MassMatrix& part : parts) {
    Rational weight;
    for (const Rational& m : part.data()) weight += m;
    if (weight.is_zero()) continue;
    MassMatrix posterior(n, k);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < k; ++j) posterior(i, j) = part(i, j) / weight;
    }
    scheme.signals.push_back(Signal{
        weight, Prior(prior.mode(), prior.values(), prior.levels(),
                      std::move(posterior))});
  }
  return scheme;
}

LinearProgram RandomBoundedLp(Rng& rng, size_t num_variables,
                              size_t num_rows) {
  LinearProgram lp;
  std::vector<Rational> point;
  for (size_t j = 0; j < num_variables; ++j) {
    lp.AddVariable("x" + std::to_string(j), Rational(Uniform(rng, -3, 5)));
    point.emplace_back(Uniform(rng, 0, 3));
  }
  for (size_t r = 0; r < num_rows; ++r) {
    const int64_t kind = Uniform(rng, 0, 6);
    const Relation rel = kind == 0   ? Relation::kEqual
                         : kind <= 3 ? Relation::kLessEqual
                                     : Relation::kGreaterEqual;
    LinearConstraint& c = lp.AddConstraint(rel, 0, "r" + std::to_string(r));
    for (Rational& a : c.coeffs) a = Rational(Uniform(rng, -3, 3));
    c.rhs = Evaluate(c.coeffs, point);
    if (rel == Relation::kLessEqual) c.rhs += Rational(Uniform(rng, 0, 2));
    if (rel == Relation::kGreaterEqual) c.rhs -= Rational(Uniform(rng, 0, 2));
  }
  LinearConstraint& cap = lp.AddConstraint(Relation::kLessEqual, 0, "cap");
  Rational sum;
  for (size_t j = 0; j < num_variables; ++j) {
    cap.coeffs[j] = Rational(1);
    sum += point[j];
  }
  cap.rhs = sum + Rational(Uniform(rng, 0, 3));
  return lp;
}

}  // namespace seg
