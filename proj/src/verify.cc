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

#include <sstream>

#include "seg/auction.h"
#include "seg/error.h"
#include "seg/signaling.h"

namespace seg {

bool VerificationReport::passed() const {
  for (const Check& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

void VerificationReport::Add(std::string name, bool passed, std::string lhs,
                             std::string rhs, std::string detail,
                             std::string relation) {
  checks.push_back({std::move(name), passed, std::move(lhs),
                    std::move(relation), std::move(rhs), std::move(detail)});
}

void VerificationReport::Append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string VerificationReport::ToString() const {
  std::ostringstream os;
  for (const Check& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.lhs.empty() || !c.rhs.empty()) {
      os << ": " << c.lhs << " " << c.relation << " " << c.rhs;
      if (!c.passed) os << " does not hold";
    }
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  return os.str();
}

VerificationReport CheckBayesPlausibility(const SignalingScheme& scheme) {
  VerificationReport report;
  const Prior& parent = scheme.parent;
  const size_t n = parent.num_values(), k = parent.num_levels();
  Rational total;
  bool positive = true;
  for (const Signal& s : scheme.signals) {
    positive = positive && s.weight.sign() > 0;
    total += s.weight;
  }
  report.Add("weights-positive", positive && !scheme.signals.empty());
  report.Add("weights-sum-to-one", total == Rational(1), total.ToString(), "1");

  for (size_t h = 0; h < scheme.signals.size(); ++h) {
    const Prior& post = scheme.signals[h].posterior;
    if (post.values() != parent.values() || post.levels() != parent.levels() ||
        post.mode() != parent.mode()) {
      report.Add("posterior-grid", false, "", "",
                 "signal " + std::to_string(h + 1) +
                     " is not on the parent's grid");
      return report;
    }
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < k; ++j) {
      Rational mix;
      for (const Signal& s : scheme.signals) {
        mix += s.weight * s.posterior.mass(i, j);
      }
      if (mix != parent.mass(i, j)) {
        report.Add("average-posterior-is-prior", false, mix.ToString(),
                   parent.mass(i, j).ToString(),
                   "type (" + parent.value(i).ToString() + "," +
                       parent.level(j).ToString() + ")");
        return report;
      }
    }
  }
  report.Add("average-posterior-is-prior", true);
  return report;
}

VerificationReport CheckBuyerOptimality(const Prior& prior,
                                        const AnnotatedScheme& scheme) {
  VerificationReport report;
  const Rational r = OptimalRevenue(prior);
  const Rational w_star = prior.FullWelfare();
  const SurplusReport& t = scheme.totals;
  report.Add("revenue-equals-optimal", t.revenue == r, t.revenue.ToString(),
             r.ToString());
  report.Add("welfare-is-efficient", t.welfare == w_star,
             t.welfare.ToString(), w_star.ToString());
  report.Add("surplus-equals-OPT", t.consumer_surplus == w_star - r,
             t.consumer_surplus.ToString(), (w_star - r).ToString());
  for (size_t h = 0; h < scheme.outcomes.size(); ++h) {
    const Prior& post = scheme.scheme.signals[h].posterior;
    const Rational& price = scheme.outcomes[h].price;
    bool ok = price <= post.MinValue();
    if (post.mode() == Mode::kPublicBudget) ok = ok && price <= post.budget();
    report.Add("signal-sells-to-all[" + std::to_string(h + 1) + "]", ok,
               price.ToString(), post.MinValue().ToString(), "", "<=");
  }
  return report;
}

VerificationReport CrossCheckSignal(const Prior& posterior) {
  VerificationReport report;
  const Rational vmin = posterior.MinValue();
  bool equal_revenue = true;
  std::string witness;
  for (size_t i = 0; i < posterior.num_values() && equal_revenue; ++i) {
    if (posterior.ValueMass(i).is_zero()) continue;
    const Rational& w = posterior.value(i);
    const Rational earned = w * posterior.TailMass(w);
    equal_revenue = earned == vmin;
    if (!equal_revenue) witness = earned.ToString();
  }
  report.Add("signal-equal-revenue", equal_revenue,
             equal_revenue ? vmin.ToString() : witness, vmin.ToString());
  const Rational lp = OptimalRevenue(posterior);
  try {
    const SignalOutcome o = SignalPostedPrice(posterior);
    report.Add("signal-lp-equals-posted-price", lp == o.revenue,
               lp.ToString(), o.revenue.ToString());
  } catch (const Error& e) {
    report.Add("signal-lp-equals-posted-price", false, lp.ToString(), "",
               e.what());
  }
  return report;
}

VerificationReport CheckSellerFloor(const SignalingScheme& scheme) {
  VerificationReport report;
  Rational total;
  for (const Signal& s : scheme.signals) {
    total += s.weight * OptimalRevenue(s.posterior);
  }
  const Rational r = OptimalRevenue(scheme.parent);
  report.Add("seller-floor", total >= r, total.ToString(), r.ToString(), "",
             ">=");
  return report;
}

VerificationReport CheckPublicMenuPersistence(const Prior& prior) {
  VerificationReport report;
  if (prior.mode() != Mode::kPublicBudget) {
    throw Error(ErrorCode::kWrongMode, "menu persistence is a public-mode check");
  }
  const AuctionResult initial = OptimalAuction(prior);
  ResidualState state = InitResidual(initial.prior);
  size_t h = 0;
  while (!IsExhausted(state)) {
    Rational menu_revenue, total;
    for (size_t i = 0; i < state.residual.rows(); ++i) {
      menu_revenue += state.residual(i, 0) * initial.menu.payment(i, 0);
      total += state.residual(i, 0);
    }
    menu_revenue /= total;
    MassMatrix scaled = state.residual;
    for (size_t i = 0; i < scaled.rows(); ++i) scaled(i, 0) /= total;
    const Rational best = OptimalRevenue(
        Prior(Mode::kPublicBudget, initial.prior.values(),
              initial.prior.levels(), std::move(scaled)));
    report.Add("menu-optimal-at-t" + std::to_string(h), menu_revenue == best,
               menu_revenue.ToString(), best.ToString(),
               "t = " + state.time.ToString());
    SegmentStep(state);
    ++h;
  }
  return report;
}

VerificationReport VerifyScheme(const SignalingScheme& scheme) {
  VerificationReport report = CheckBayesPlausibility(scheme);
  if (!report.passed()) return report;
  AnnotatedScheme annotated{scheme, {}, {}};
  try {
    annotated = AnnotateScheme(scheme);
  } catch (const Error& e) {
    report.Add("posted-price-signals", false, "", "", e.what());
    return report;
  }
  report.Append(CheckBuyerOptimality(scheme.parent, annotated));
  for (size_t h = 0; h < scheme.signals.size(); ++h) {
    VerificationReport one = CrossCheckSignal(scheme.signals[h].posterior);
    for (Check& c : one.checks) c.name += "[" + std::to_string(h + 1) + "]";
    report.Append(one);
  }
  return report;
}

}  // namespace seg
