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

#include "seg/envelope.h"

#include <algorithm>

#include "seg/error.h"

namespace seg {

EqualRevenueDist EqualRevenue(std::vector<Rational> support) {
  if (support.empty()) throw Error(ErrorCode::kBadSupport, "empty support");
  for (size_t i = 1; i < support.size(); ++i) {
    if (!(support[i - 1] < support[i])) {
      throw Error(ErrorCode::kBadSupport, "support is not strictly increasing");
    }
  }
  if (support.front().sign() <= 0) {
    throw Error(ErrorCode::kBadSupport, "support has a non-positive value");
  }
  // Tail mass at w_i is w_1 / w_i.
  const size_t m = support.size();
  EqualRevenueDist out{support, std::vector<Rational>(m)};
  const Rational& lo = support.front();
  for (size_t i = 0; i < m; ++i) {
    Rational tail = lo / support[i];
    if (i + 1 < m) tail -= lo / support[i + 1];
    out.probs[i] = tail;
  }
  return out;
}

LowerEnvelope ComputeLowerEnvelope(const MassMatrix& mass) {
  const size_t n = mass.rows();
  const size_t k = mass.cols();
  LowerEnvelope env;
  env.cuts.assign(k + 1, n);
  for (size_t j = k; j-- > 0;) {
    size_t first = n;
    for (size_t i = 0; i < n; ++i) {
      if (!mass(i, j).is_zero()) {
        first = i;
        break;
      }
    }
    env.cuts[j] = std::min(env.cuts[j + 1], first);
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < k; ++j) {
      if (!mass(i, j).is_zero() && env.cuts[j] <= i && i < env.cuts[j + 1]) {
        env.points.emplace_back(i, j);
      }
    }
  }
  if (env.points.empty()) throw Error(ErrorCode::kEmptySupport, "no mass");
  return env;
}

std::vector<std::pair<TypeIndex, TypeIndex>> ConsecutivePairs(
    const LowerEnvelope& env) {
  std::vector<std::pair<TypeIndex, TypeIndex>> out;
  for (size_t p = 0; p + 1 < env.points.size(); ++p) {
    out.emplace_back(env.points[p], env.points[p + 1]);
  }
  return out;
}

MassMatrix EnvelopeSignal(const std::vector<Rational>& values,
                          const MassMatrix& mass) {
  if (values.size() != mass.rows()) {
    throw Error(ErrorCode::kBadShape, "value grid does not match masses");
  }
  const LowerEnvelope env = ComputeLowerEnvelope(mass);
  std::vector<Rational> support;
  for (const auto& [i, j] : env.points) support.push_back(values[i]);
  const EqualRevenueDist er = EqualRevenue(support);
  MassMatrix out(mass.rows(), mass.cols());
  for (size_t p = 0; p < env.points.size(); ++p) {
    out(env.points[p].first, env.points[p].second) = er.probs[p];
  }
  return out;
}

}  // namespace seg
