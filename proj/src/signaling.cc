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

#include "seg/signaling.h"

#include <algorithm>
#include <optional>

#include "seg/envelope.h"
#include "seg/error.h"

namespace seg {

ResidualState InitResidual(const Prior& input) {
  if (input.mode() == Mode::kPrivateBudget) {
    throw Error(ErrorCode::kWrongMode,
                "segmentation needs public budgets or deadlines");
  }
  Prior parent = NormalizePrior(input);
  MassMatrix residual = parent.masses();
  return ResidualState{std::move(parent), Rational(0), std::move(residual),
                       MassMatrix(), {}};
}

bool IsExhausted(const ResidualState& state) {
  for (const Rational& m : state.residual.data()) {
    if (!m.is_zero()) return false;
  }
  return true;
}

Signal SegmentStep(ResidualState& state) {
  if (IsExhausted(state)) {
    throw Error(ErrorCode::kExhausted, "residual is empty");
  }
  const size_t n = state.residual.rows(), k = state.residual.cols();
  state.rate = EnvelopeSignal(state.parent.values(), state.residual);

  std::optional<Rational> step;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < k; ++j) {
      if (state.rate(i, j).is_zero()) continue;
      Rational ratio = state.residual(i, j) / state.rate(i, j);
      if (!step || ratio < *step) step = std::move(ratio);
    }
  }
  ExhaustionEvent event{state.time + *step, {}};
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < k; ++j) {
      if (state.rate(i, j).is_zero()) continue;
      state.residual(i, j) -= *step * state.rate(i, j);
      if (state.residual(i, j).sign() < 0) {
        throw Error(ErrorCode::kNegativeMass, "residual went negative");
      }
      if (state.residual(i, j).is_zero()) event.exhausted.emplace_back(i, j);
    }
  }
  state.time = event.time;
  state.events.push_back(std::move(event));
  return Signal{*step, Prior(state.parent.mode(), state.parent.values(),
                             state.parent.levels(), state.rate)};
}

SignalingScheme Segment(const Prior& prior) {
  ResidualState state = InitResidual(prior);
  SignalingScheme scheme{state.parent, {}, {}};
  while (!IsExhausted(state)) scheme.signals.push_back(SegmentStep(state));
  scheme.events = std::move(state.events);
  return scheme;
}

std::vector<Rational> CumulativeTimes(const SignalingScheme& scheme) {
  std::vector<Rational> out{Rational(0)};
  for (const ExhaustionEvent& e : scheme.events) out.push_back(e.time);
  return out;
}

SignalingScheme NaivePerLevelScheme(const Prior& input) {
  if (input.mode() != Mode::kDeadlines) {
    throw Error(ErrorCode::kWrongMode, "the per-level baseline needs deadlines");
  }
  const Prior parent = NormalizePrior(input);
  const size_t n = parent.num_values(), k = parent.num_levels();
  SignalingScheme scheme{parent, {}, {}};
  for (size_t j = 0; j < k; ++j) {
    const Rational level_mass = parent.LevelMass(j);
    if (level_mass.is_zero()) continue;
    const std::vector<Rational> marginal = parent.Marginal(j);
    MassMatrix column(n, 1);
    for (size_t i = 0; i < n; ++i) column(i, 0) = marginal[i];
    // The top value as budget never binds below any posterior minimum.
    const Prior conditional(Mode::kPublicBudget, parent.values(),
                            {parent.values().back()}, std::move(column));
    for (const Signal& s : Segment(conditional).signals) {
      const Prior& post = s.posterior;
      MassMatrix embedded(n, k);
      for (size_t i = 0; i < n; ++i) {
        const auto it = std::find(post.values().begin(), post.values().end(),
                                  parent.value(i));
        if (it != post.values().end()) {
          embedded(i, j) = post.mass(
              static_cast<size_t>(it - post.values().begin()), 0);
        }
      }
      scheme.signals.push_back(
          Signal{s.weight * level_mass,
                 Prior(Mode::kDeadlines, parent.values(), parent.levels(),
                       std::move(embedded))});
    }
  }
  return scheme;
}

}  // namespace seg
