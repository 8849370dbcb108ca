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

#include <gtest/gtest.h>

#include "seg/random.h"
#include "test_util.h"

namespace seg {
namespace {

using test::CodeOf;
using test::Mass;
using test::Q;
using test::Qs;

// A massed type is on the envelope when no later level has mass at the
// same or a lower value.
std::vector<TypeIndex> EnvelopeOracle(const MassMatrix& m) {
  std::vector<TypeIndex> out;
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      bool undercut = false;
      for (size_t i2 = 0; i2 <= i && !undercut; ++i2) {
        for (size_t j2 = j + 1; j2 < m.cols(); ++j2) {
          undercut = undercut || !m(i2, j2).is_zero();
        }
      }
      if (!undercut) out.emplace_back(i, j);
    }
  }
  return out;
}

TEST(EqualRevenueTest, ClosedForms) {
  EqualRevenueDist d = EqualRevenue(Qs({"1", "3"}));
  EXPECT_EQ(d.probs, Qs({"2/3", "1/3"}));
  d = EqualRevenue(Qs({"7/2"}));
  EXPECT_EQ(d.probs, Qs({"1"}));
  d = EqualRevenue(Qs({"1", "2", "3"}));
  EXPECT_EQ(d.probs, Qs({"1/2", "1/6", "1/3"}));
}

TEST(EqualRevenueTest, RejectsBadSupport) {
  EXPECT_EQ(CodeOf([] { EqualRevenue({}); }), ErrorCode::kBadSupport);
  EXPECT_EQ(CodeOf([] { EqualRevenue(Qs({"3", "1"})); }),
            ErrorCode::kBadSupport);
  EXPECT_EQ(CodeOf([] { EqualRevenue(Qs({"1", "1"})); }),
            ErrorCode::kBadSupport);
  EXPECT_EQ(CodeOf([] { EqualRevenue(Qs({"0", "1"})); }),
            ErrorCode::kBadSupport);
}

TEST(EqualRevenueProperty, EveryPriceEarnsTheSame) {
  Rng rng(5);
  std::uniform_int_distribution<int> step(1, 12), den(1, 5), len(1, 6);
  for (int it = 0; it < 300; ++it) {
    std::vector<Rational> support;
    Rational v(0);
    for (int i = len(rng); i > 0; --i) {
      v += Rational(step(rng), den(rng));
      support.push_back(v);
    }
    const EqualRevenueDist d = EqualRevenue(support);
    Rational total;
    for (const Rational& p : d.probs) {
      ASSERT_GT(p, Rational(0));
      total += p;
    }
    ASSERT_EQ(total, Rational(1));
    for (size_t i = 0; i < support.size(); ++i) {
      Rational tail;
      for (size_t i2 = i; i2 < support.size(); ++i2) tail += d.probs[i2];
      ASSERT_EQ(support[i] * tail, support[0]);
    }
  }
}

TEST(LowerEnvelopeTest, SixTypePrior) {
  const LowerEnvelope env =
      ComputeLowerEnvelope(test::SixTypePrior().masses());
  const std::vector<TypeIndex> expected = {{0, 1}, {1, 1}, {2, 3}};
  EXPECT_EQ(env.points, expected);
}

TEST(LowerEnvelopeTest, PointMass) {
  MassMatrix m(3, 3);
  m(1, 2) = Rational(1);
  const std::vector<TypeIndex> expected = {{1, 2}};
  EXPECT_EQ(ComputeLowerEnvelope(m).points, expected);
}

TEST(LowerEnvelopeTest, TwoCornerTypes) {
  // Values {2, 3}; (2, 1) and (3, 4) with half each.
  const MassMatrix m = Mass({{"1/2", "0", "0", "0"}, {"0", "0", "0", "1/2"}});
  const LowerEnvelope env = ComputeLowerEnvelope(m);
  const std::vector<TypeIndex> expected = {{0, 0}, {1, 3}};
  EXPECT_EQ(env.points, expected);
  const std::vector<size_t> cuts = {0, 1, 1, 1, 2};
  EXPECT_EQ(env.cuts, cuts);
}

TEST(LowerEnvelopeTest, EmptyThrows) {
  EXPECT_EQ(CodeOf([] { ComputeLowerEnvelope(MassMatrix(2, 2)); }),
            ErrorCode::kEmptySupport);
}

TEST(LowerEnvelopeTest, ConsecutivePairs) {
  LowerEnvelope env = ComputeLowerEnvelope(test::SixTypePrior().masses());
  auto pairs = ConsecutivePairs(env);
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0], std::make_pair(TypeIndex{0, 1}, TypeIndex{1, 1}));
  EXPECT_EQ(pairs[1], std::make_pair(TypeIndex{1, 1}, TypeIndex{2, 3}));

  MassMatrix single(1, 1);
  single(0, 0) = Rational(1);
  EXPECT_TRUE(ConsecutivePairs(ComputeLowerEnvelope(single)).empty());

  env = ComputeLowerEnvelope(
      Mass({{"1/2", "0", "0", "0"}, {"0", "0", "0", "1/2"}}));
  pairs = ConsecutivePairs(env);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0], std::make_pair(TypeIndex{0, 0}, TypeIndex{1, 3}));
}

TEST(EnvelopeSignalTest, SixTypePrior) {
  const Prior p = test::SixTypePrior();
  const MassMatrix s = EnvelopeSignal(p.values(), p.masses());
  MassMatrix expected(4, 4);
  expected(0, 1) = Q("1/2");
  expected(1, 1) = Q("1/6");
  expected(2, 3) = Q("1/3");
  EXPECT_EQ(s, expected);
}

TEST(EnvelopeSignalTest, PointMass) {
  MassMatrix m(2, 2);
  m(1, 0) = Q("1/3");
  EXPECT_EQ(EnvelopeSignal(Qs({"1", "2"}), m), test::Scaled(m, Rational(3)));
}

TEST(EnvelopeSignalTest, ResidualAfterFirstInterval) {
  const MassMatrix residual = Mass({{"0", "0", "0", "0"},
                                    {"1/6", "1/9", "0", "0"},
                                    {"1/6", "0", "0", "1/18"},
                                    {"0", "0", "1/6", "0"}});
  const MassMatrix s = EnvelopeSignal(Qs({"1", "2", "3", "4"}), residual);
  MassMatrix expected(4, 4);
  expected(1, 1) = Q("1/3");
  expected(2, 3) = Q("2/3");
  EXPECT_EQ(s, expected);
  // The second signal's weighted masses divided by its weight 6/72.
  const MassMatrix weighted = Mass({{"0", "0", "0", "0"},
                                    {"0", "1/36", "0", "0"},
                                    {"0", "0", "0", "1/18"},
                                    {"0", "0", "0", "0"}});
  EXPECT_EQ(s, test::Scaled(weighted, Rational(12)));
}

TEST(EnvelopeSignalTest, ShapeMismatchThrows) {
  EXPECT_EQ(CodeOf([] { EnvelopeSignal(Qs({"1"}), MassMatrix(2, 1)); }),
            ErrorCode::kBadShape);
}

TEST(EnvelopeProperty, MatchesOracleOnRandomPriors) {
  Rng rng(9);
  PriorGenOptions o;
  o.mode = Mode::kDeadlines;
  for (int it = 0; it < 500; ++it) {
    const Prior p = RandomPrior(rng, o);
    const LowerEnvelope env = ComputeLowerEnvelope(p.masses());
    ASSERT_EQ(env.points, EnvelopeOracle(p.masses()));
    for (size_t q = 1; q < env.points.size(); ++q) {
      ASSERT_LT(env.points[q - 1].first, env.points[q].first);
      ASSERT_LE(env.points[q - 1].second, env.points[q].second);
    }
    ASSERT_EQ(p.value(env.points.front().first), p.MinValue());
    // The lowest value at its latest massed level is on the envelope.
    size_t top = 0;
    for (size_t j = 0; j < p.num_levels(); ++j) {
      if (!p.mass(0, j).is_zero()) top = j;
    }
    ASSERT_EQ(env.points.front(), TypeIndex(0, top));

    std::vector<Rational> support;
    for (const auto& [i, j] : env.points) support.push_back(p.value(i));
    const EqualRevenueDist er = EqualRevenue(support);
    const MassMatrix s = EnvelopeSignal(p.values(), p.masses());
    for (size_t q = 0; q < env.points.size(); ++q) {
      Rational row;
      for (size_t j = 0; j < p.num_levels(); ++j) {
        row += s(env.points[q].first, j);
      }
      ASSERT_EQ(row, er.probs[q]);
    }
  }
}

}  // namespace
}  // namespace seg
