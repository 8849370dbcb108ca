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

// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons
// only. Exits 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "seg/auction.h"
#include "seg/canonical.h"
#include "seg/envelope.h"
#include "seg/lp.h"
#include "seg/private_budget.h"
#include "seg/random.h"
#include "seg/signaling.h"
#include "seg/verify.h"
#include "test_util.h"
#include "worked_example.h"

namespace seg {
namespace {

using test::Q;

// Collects the first failure of a criterion.
class Outcome {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  template <typename A, typename B>
  void ExpectEq(const A& a, const B& b, const std::string& what) {
    if (a == b) return;
    std::ostringstream os;
    os << what << ": " << a << " != " << b;
    Expect(false, os.str());
  }
  bool passed() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  std::string note;

 private:
  std::string failure_;
};

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

Rational LpRevenue(const Prior& p) {
  return SolveLpExact(BuildAuctionLp(p)).objective;
}

// Posteriors produced by criteria 1 to 4, rechecked by criterion 7.
std::vector<Prior> g_signals;

void Record(const SignalingScheme& s) {
  for (const Signal& sig : s.signals) g_signals.push_back(sig.posterior);
}

Outcome WorkedExample() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  const SignalingScheme s = Segment(test::SixTypePrior());
  const AnnotatedScheme a = AnnotateScheme(s);
  const double secs = Seconds(start);
  out.ExpectEq(s.signals.size(), size_t{6}, "signal count");
  for (size_t h = 0; h < s.signals.size() && h < 6; ++h) {
    const std::string tag = "S_" + std::to_string(h + 1);
    out.ExpectEq(s.signals[h].weight, Rational(test::kWeights72[h], 72),
                 tag + " weight");
    out.Expect(test::Scaled(s.signals[h].posterior.masses(),
                            s.signals[h].weight) ==
                   test::ToMatrix(test::kWeightedSignals72[h]),
               tag + " weighted signal differs from the reference timeline");
    out.ExpectEq(a.outcomes[h].price, Rational(test::kPrices[h]),
                 tag + " price");
  }
  out.ExpectEq(a.totals.revenue, Q("5/3"), "R");
  out.ExpectEq(a.totals.welfare, Q("5/2"), "W");
  out.ExpectEq(a.totals.consumer_surplus, Q("5/6"), "CS");
  out.Expect(secs < 1.0, "runtime " + std::to_string(secs) + " s");
  Record(s);
  out.note = "6 signals, R=5/3 W=5/2 CS=5/6, " + std::to_string(secs) + " s";
  return out;
}

Outcome TwoPointExample() {
  Outcome out;
  const SignalingScheme s = Segment(test::TwoPointPublic());
  const AnnotatedScheme a = AnnotateScheme(s);
  out.ExpectEq(s.signals.size(), size_t{2}, "signal count");
  if (s.signals.size() == 2) {
    out.ExpectEq(s.signals[0].weight, Q("3/4"), "w_1");
    out.ExpectEq(s.signals[1].weight, Q("1/4"), "w_2");
    out.ExpectEq(s.signals[0].posterior.mass(0, 0), Q("2/3"), "S_1(1)");
    out.ExpectEq(s.signals[0].posterior.mass(1, 0), Q("1/3"), "S_1(3)");
  }
  out.ExpectEq(a.totals.revenue, Q("3/2"), "R(Z)");
  out.ExpectEq(a.totals.consumer_surplus, Q("1/2"), "CS(Z)");
  Record(s);
  out.note = "weights 3/4, 1/4, R=3/2 CS=1/2";
  return out;
}

Outcome NaiveBaseline() {
  Outcome out;
  const Prior p = test::SixTypePrior();
  const AnnotatedScheme a = AnnotateScheme(NaivePerLevelScheme(p));
  out.ExpectEq(a.totals.consumer_surplus, Q("1/3"), "naive CS");
  out.Expect(!CheckBuyerOptimality(p, a).passed(),
             "naive scheme passed the buyer-optimality check");
  out.note = "CS=" + a.totals.consumer_surplus.ToString() +
             ", buyer-optimality check fails";
  return out;
}

Outcome RandomPriorSuite() {
  Outcome out;
  Rng rng(2026);
  const int count = 600;
  const auto start = std::chrono::steady_clock::now();
  for (int it = 0; it < count && out.passed(); ++it) {
    PriorGenOptions o;
    o.mode = it % 2 ? Mode::kPublicBudget : Mode::kDeadlines;
    const Prior p = RandomPrior(rng, o);
    const std::string tag = "prior " + std::to_string(it);

    ResidualState state = InitResidual(p);
    SignalingScheme s{state.parent, {}, {}};
    while (!IsExhausted(state)) {
      s.signals.push_back(SegmentStep(state));
      Rational left;
      for (const Rational& x : state.residual.data()) left += x;
      out.ExpectEq(left, Rational(1) - state.time, tag + " residual mass");
    }
    out.ExpectEq(state.time, Rational(1), tag + " final time");

    MassMatrix mix(p.num_values(), p.num_levels());
    Rational price_revenue, welfare;
    for (const Signal& sig : s.signals) {
      for (size_t i = 0; i < p.num_values(); ++i) {
        for (size_t j = 0; j < p.num_levels(); ++j) {
          mix(i, j) += sig.weight * sig.posterior.mass(i, j);
        }
      }
      const Rational price = SignalPostedPrice(sig.posterior).price;
      out.Expect(price <= sig.posterior.MinValue(),
                 tag + " price above the signal's lowest value");
      price_revenue += sig.weight * price;
    }
    out.Expect(mix == p.masses(), tag + " Bayes plausibility");
    for (size_t i = 0; i < p.num_values(); ++i) {
      welfare += p.value(i) * p.ValueMass(i);
    }
    const Rational r = LpRevenue(p);
    const AnnotatedScheme a = AnnotateScheme(s);
    out.ExpectEq(price_revenue, r, tag + " sum of w * price vs R(D)");
    out.ExpectEq(a.totals.welfare, welfare, tag + " welfare vs E[v]");
    out.ExpectEq(a.totals.consumer_surplus, welfare - r, tag + " CS vs OPT");
    out.Expect(s.signals.size() <= p.Support().size(), tag + " H > |supp|");
    Record(s);
  }
  const double secs = Seconds(start);
  out.Expect(secs < 60.0, "runtime " + std::to_string(secs) + " s");
  out.note = std::to_string(count) + " priors, " + std::to_string(secs) + " s";
  return out;
}

Outcome OracleEquivalence() {
  Outcome out;
  Rng rng(12);
  std::uniform_int_distribution<size_t> vars(1, 12);
  int count = 0;
  for (; count < 120 && out.passed(); ++count) {
    const size_t n = vars(rng);
    std::uniform_int_distribution<size_t> rows(
        1, test::MaxRowsForOracle(n, 20000));
    const LinearProgram lp = RandomBoundedLp(rng, n, rows(rng));
    out.ExpectEq(SolveLpExact(lp).objective, VertexOracle(lp).objective,
                 "random LP " + std::to_string(count));
  }
  for (int it = 0; it < 12 && out.passed(); ++it, ++count) {
    PriorGenOptions o;
    o.mode = it % 3 ? Mode::kPublicBudget : Mode::kPrivateBudget;
    o.max_values = it % 3 ? 3 : 2;
    o.max_levels = 2;
    const LinearProgram lp = BuildAuctionLp(RandomPrior(rng, o));
    out.ExpectEq(SolveLpExact(lp).objective, VertexOracle(lp).objective,
                 "auction LP " + std::to_string(it));
  }
  out.note = std::to_string(count) + " programs with at most 12 variables";
  return out;
}

Outcome Canonicalization() {
  Outcome out;
  Rng rng(4242);
  PriorGenOptions o;
  o.mode = Mode::kDeadlines;
  const int count = 120;
  for (int it = 0; it < count && out.passed(); ++it) {
    const Prior p = RandomPrior(rng, o);
    const std::string tag = "prior " + std::to_string(it);
    const AuctionResult a = OptimalAuction(p);
    const AllocationCurve c = CanonicalizeDeadlines(a.prior, a.menu);
    const std::vector<std::string> failed =
        CanonicalPropertyFailures(a.prior, c);
    out.Expect(failed.empty(),
               tag + " curve property " + (failed.empty() ? "" : failed[0]));
    const PostedPriceMix mix = Decompose(a.prior, c);
    const Prior& q = a.prior;
    const size_t k = q.num_levels();
    const LowerEnvelope env = ComputeLowerEnvelope(q.masses());
    // Weight at an envelope value is the same at its level and later ones.
    for (const auto& [i, r] : env.points) {
      for (size_t j = r; j < k; ++j) {
        out.ExpectEq(mix.delta(i, j), mix.delta(i, r), tag + " bullet 1");
      }
    }
    // No weight strictly between consecutive envelope values.
    for (size_t e = 0; e + 1 < env.points.size(); ++e) {
      const auto [lo, r] = env.points[e];
      for (size_t i = lo + 1; i < env.points[e + 1].first; ++i) {
        for (size_t j = r; j < k; ++j) {
          out.ExpectEq(mix.delta(i, j), Rational(0), tag + " bullet 2");
        }
      }
    }
    Rational top;
    for (const auto& [i, r] : env.points) top += mix.delta(i, k - 1);
    out.ExpectEq(top, Rational(1), tag + " bullet 3");

    Rational revenue;
    for (size_t j = 0; j < k; ++j) {
      for (size_t i = 0; i < mix.prices.size(); ++i) {
        revenue += mix.delta(i, j) * mix.prices[i] * q.LevelMass(j) *
                   q.TailMass(mix.prices[i], j);
      }
    }
    out.ExpectEq(revenue, LpRevenue(p), tag + " decomposition revenue");
  }
  out.note = std::to_string(count) + " deadlines priors";
  return out;
}

Outcome SignalPricing() {
  Outcome out;
  for (size_t h = 0; h < g_signals.size() && out.passed(); ++h) {
    out.ExpectEq(LpRevenue(g_signals[h]), SignalPostedPrice(g_signals[h]).revenue,
                 "signal " + std::to_string(h));
  }
  out.Expect(!g_signals.empty(), "no signals recorded");
  out.note = std::to_string(g_signals.size()) + " signals";
  return out;
}

Outcome Impossibility() {
  Outcome out;
  {
    const CounterexampleInstance inst = MakeCounterexample(100, Q("1/200"));
    const Rational opt = Q("1/200") * Q("199/200") * 100;
    out.ExpectEq(EfficientSchemeCs(inst), opt / 100, "efficient CS vs OPT/100");
  }
  {
    const Rational d = Q("9/20");
    const CounterexampleInstance inst = MakeCounterexample(2, d);
    const Rational cs = MaxCsScheme(inst).surplus;
    const Rational opt = d * (Rational(1) - d) * 2;
    out.ExpectEq(cs, d * (Rational(2) - Rational(3) * d), "max CS");
    out.Expect(cs <= (Q("1/2") + Q("1/10")) * opt, "max CS above (1/2+eps)OPT");
  }
  int grid = 0;
  for (const char* m : {"3/2", "2", "5", "100"}) {
    for (int denom : {2, 4, 10}) {
      const Rational M = Q(m);
      const Rational d = Rational(1) / (Rational(denom) * M);
      const CounterexampleInstance inst = MakeCounterexample(M, d);
      const Rational closed = Rational(1) - d + d * d * M;
      out.ExpectEq(LpRevenue(inst.prior), closed,
                   "grid M=" + M.ToString() + " delta=" + d.ToString());
      out.ExpectEq(ClosedFormOptimal(inst).report.revenue, closed,
                   "closed-form menu revenue");
      ++grid;
    }
  }
  out.note = "eps=1/100, eps=1/10, " + std::to_string(grid) + "-point grid";
  return out;
}

Outcome SellerFloor() {
  Outcome out;
  Rng rng(99);
  const int count = 150;
  for (int it = 0; it < count && out.passed(); ++it) {
    PriorGenOptions o;
    o.mode = it % 3 == 0   ? Mode::kPublicBudget
             : it % 3 == 1 ? Mode::kDeadlines
                           : Mode::kPrivateBudget;
    const Prior p = RandomPrior(rng, o);
    const SignalingScheme s = RandomPlausibleScheme(rng, p);
    MassMatrix mix(p.num_values(), p.num_levels());
    Rational total;
    for (const Signal& sig : s.signals) {
      for (size_t i = 0; i < p.num_values(); ++i) {
        for (size_t j = 0; j < p.num_levels(); ++j) {
          mix(i, j) += sig.weight * sig.posterior.mass(i, j);
        }
      }
      total += sig.weight * LpRevenue(sig.posterior);
    }
    const std::string tag = "scheme " + std::to_string(it);
    out.Expect(mix == p.masses(), tag + " is not Bayes-plausible");
    out.Expect(total >= LpRevenue(p), tag + " earns below R(D)");
  }
  out.note = std::to_string(count) + " schemes";
  return out;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace seg

int main() {
  using seg::Criterion;
  const std::vector<Criterion> criteria = {
      {1, "worked example reproduction", seg::WorkedExample},
      {2, "two-point public example", seg::TwoPointExample},
      {3, "naive per-deadline baseline", seg::NaiveBaseline},
      {4, "random-prior pipeline invariants", seg::RandomPriorSuite},
      {5, "simplex equals vertex oracle", seg::OracleEquivalence},
      {6, "deadlines canonicalization", seg::Canonicalization},
      {7, "signal LP equals posted price", seg::SignalPricing},
      {8, "private-budget impossibility", seg::Impossibility},
      {9, "seller floor", seg::SellerFloor},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    seg::Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.Expect(false, std::string("threw: ") + e.what());
    }
    if (out.passed()) {
      std::printf("PASS %d %s (%s)\n", c.id, c.name, out.note.c_str());
    } else {
      ++failed;
      std::printf("FAIL %d %s: %s\n", c.id, c.name, out.failure().c_str());
    }
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
