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

#include "seg/verify.h"

#include <gtest/gtest.h>

#include "seg/auction.h"
#include "seg/random.h"
#include "seg/signaling.h"
#include "test_util.h"

namespace seg {
namespace {

using test::CodeOf;
using test::Mass;
using test::Q;

const Check* Find(const VerificationReport& r, const std::string& name) {
  for (const Check& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

TEST(BayesPlausibilityTest, SixTypeScheme) {
  EXPECT_TRUE(CheckBayesPlausibility(Segment(test::SixTypePrior())).passed());
}

TEST(BayesPlausibilityTest, PerturbedWeightFails) {
  SignalingScheme s = Segment(test::SixTypePrior());
  s.signals[0].weight += Q("1/1000");
  const VerificationReport r = CheckBayesPlausibility(s);
  EXPECT_FALSE(r.passed());
  const Check* c = Find(r, "average-posterior-is-prior");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->passed);
  EXPECT_EQ(c->rhs, "1/6");
  EXPECT_NE(c->detail.find("(1,2)"), std::string::npos);
  EXPECT_NE(r.ToString().find("FAIL weights-sum-to-one"), std::string::npos);
}

TEST(BayesPlausibilityTest, SingleSignalEqualToPrior) {
  const Prior p = test::SixTypePrior();
  EXPECT_TRUE(CheckBayesPlausibility({p, {{Rational(1), p}}, {}}).passed());
}

TEST(BuyerOptimalityTest, SixTypeScheme) {
  const Prior p = test::SixTypePrior();
  const VerificationReport r =
      CheckBuyerOptimality(p, AnnotateScheme(Segment(p)));
  EXPECT_TRUE(r.passed()) << r.ToString();
  EXPECT_EQ(Find(r, "welfare-is-efficient")->lhs, "5/2");
  EXPECT_EQ(Find(r, "revenue-equals-optimal")->lhs, "5/3");
  EXPECT_EQ(Find(r, "surplus-equals-OPT")->lhs, "5/6");
}

TEST(BuyerOptimalityTest, NaiveSchemeFails) {
  const Prior p = test::SixTypePrior();
  const VerificationReport r =
      CheckBuyerOptimality(p, AnnotateScheme(NaivePerLevelScheme(p)));
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(Find(r, "revenue-equals-optimal")->passed);
  const Check* cs = Find(r, "surplus-equals-OPT");
  EXPECT_FALSE(cs->passed);
  EXPECT_EQ(cs->lhs, "1/3");
  EXPECT_EQ(cs->rhs, "5/6");
  EXPECT_NE(r.ToString().find("FAIL surplus-equals-OPT: 1/3 == 5/6"),
            std::string::npos);
}

TEST(BuyerOptimalityTest, PointMass) {
  const Prior p = test::PointMass(Mode::kDeadlines, 2, 1);
  const VerificationReport r =
      CheckBuyerOptimality(p, AnnotateScheme(Segment(p)));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(Find(r, "surplus-equals-OPT")->lhs, "0");
}

TEST(SellerFloorTest, FullyRevealing) {
  const Prior p = test::TwoPointPublic();
  const Prior low(p.mode(), p.values(), p.levels(), Mass({{"1"}, {"0"}}));
  const Prior high(p.mode(), p.values(), p.levels(), Mass({{"0"}, {"1"}}));
  const SignalingScheme s{p, {{Q("1/2"), low}, {Q("1/2"), high}}, {}};
  const VerificationReport r = CheckSellerFloor(s);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checks[0].lhs, "2");
  EXPECT_EQ(r.checks[0].rhs, "3/2");
}

TEST(SellerFloorTest, TrivialSchemeIsTight) {
  const Prior p = test::SixTypePrior();
  const VerificationReport r = CheckSellerFloor({p, {{Rational(1), p}}, {}});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checks[0].lhs, r.checks[0].rhs);
}

TEST(CrossCheckSignalTest, SixTypeSignals) {
  const SignalingScheme s = Segment(test::SixTypePrior());
  const VerificationReport first = CrossCheckSignal(s.signals[0].posterior);
  EXPECT_TRUE(first.passed());
  EXPECT_EQ(Find(first, "signal-lp-equals-posted-price")->lhs, "1");
  for (const Signal& sig : s.signals) {
    EXPECT_TRUE(CrossCheckSignal(sig.posterior).passed());
  }
}

TEST(CrossCheckSignalTest, PointMassAndNonSignal) {
  const VerificationReport point =
      CrossCheckSignal(test::PointMass(Mode::kPublicBudget, 4, 10));
  EXPECT_TRUE(point.passed());
  EXPECT_EQ(Find(point, "signal-lp-equals-posted-price")->lhs, "4");
  const VerificationReport bad = CrossCheckSignal(test::TwoPointPublic());
  EXPECT_FALSE(bad.passed());
  EXPECT_FALSE(Find(bad, "signal-equal-revenue")->passed);
}

TEST(MenuPersistenceTest, PublicOnly) {
  EXPECT_TRUE(CheckPublicMenuPersistence(test::TwoPointPublic()).passed());
  EXPECT_EQ(CodeOf([] { CheckPublicMenuPersistence(test::SixTypePrior()); }),
            ErrorCode::kWrongMode);
}

TEST(VerifyProperty, PipelinePassesOnRandomPriors) {
  Rng rng(303);
  for (int it = 0; it < 500; ++it) {
    PriorGenOptions o;
    o.mode = it % 2 ? Mode::kPublicBudget : Mode::kDeadlines;
    const Prior p = RandomPrior(rng, o);
    const VerificationReport r = VerifyScheme(Segment(p));
    ASSERT_TRUE(r.passed()) << it << "\n" << r.ToString();
  }
}

TEST(VerifyProperty, SellerFloorOnRandomSchemes) {
  Rng rng(404);
  for (int it = 0; it < 120; ++it) {
    PriorGenOptions o;
    o.mode = it % 3 == 0   ? Mode::kPublicBudget
             : it % 3 == 1 ? Mode::kDeadlines
                           : Mode::kPrivateBudget;
    const Prior p = RandomPrior(rng, o);
    const SignalingScheme s = RandomPlausibleScheme(rng, p);
    ASSERT_TRUE(CheckBayesPlausibility(s).passed());
    ASSERT_TRUE(CheckSellerFloor(s).passed()) << it;
  }
}

TEST(VerifyProperty, PublicMenuPersistence) {
  Rng rng(505);
  PriorGenOptions o;
  o.mode = Mode::kPublicBudget;
  for (int it = 0; it < 150; ++it) {
    const VerificationReport r =
        CheckPublicMenuPersistence(RandomPrior(rng, o));
    ASSERT_TRUE(r.passed()) << r.ToString();
  }
}

}  // namespace
}  // namespace seg
