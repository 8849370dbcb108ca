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

#include "seg/auction.h"

#include <string>
#include <utility>

#include "seg/error.h"

namespace seg {

namespace {

std::string TypeName(const Prior& prior, size_t i, size_t j) {
  return "(" + prior.value(i).ToString() + "," + prior.level(j).ToString() +
         ")";
}

}  // namespace

LinearProgram BuildAuctionLp(const Prior& prior) {
  const AuctionLayout L{prior.num_values(), prior.num_levels()};
  LinearProgram lp;
  for (size_t i = 0; i < L.n; ++i) {
    for (size_t j = 0; j < L.k; ++j) {
      lp.AddVariable("p" + TypeName(prior, i, j), prior.mass(i, j));
      lp.AddVariable("x" + TypeName(prior, i, j));
    }
  }
  // Row for  v_i x_ij - p_ij - (v_i x_i'j' - p_i'j') >= 0.
  auto add_ic = [&](size_t i, size_t j, size_t i2, size_t j2,
                    const std::string& name) {
    LinearConstraint& c = lp.AddConstraint(Relation::kGreaterEqual, 0, name);
    const Rational& v = prior.value(i);
    c.coeffs[L.allocation(i, j)] += v;
    c.coeffs[L.payment(i, j)] -= 1;
    c.coeffs[L.allocation(i2, j2)] -= v;
    c.coeffs[L.payment(i2, j2)] += 1;
  };
  for (size_t j = 0; j < L.k; ++j) {
    for (size_t i = 0; i < L.n; ++i) {
      for (size_t i2 = 0; i2 < L.n; ++i2) {
        add_ic(i, j, i2, j,
               "ic" + TypeName(prior, i, j) + "->" + TypeName(prior, i2, j));
      }
    }
  }
  for (size_t j = 1; j < L.k; ++j) {
    for (size_t i = 0; i < L.n; ++i) {
      add_ic(i, j, i, j - 1,
             "ic" + TypeName(prior, i, j) + "->" + TypeName(prior, i, j - 1));
    }
  }
  for (size_t i = 0; i < L.n; ++i) {
    for (size_t j = 0; j < L.k; ++j) {
      LinearConstraint& c = lp.AddConstraint(Relation::kGreaterEqual, 0,
                                             "ir" + TypeName(prior, i, j));
      c.coeffs[L.allocation(i, j)] = prior.value(i);
      c.coeffs[L.payment(i, j)] = -1;
    }
  }
  for (size_t i = 0; i < L.n; ++i) {
    for (size_t j = 0; j < L.k; ++j) {
      lp.AddConstraint(Relation::kGreaterEqual, 0,
                       "x>=0" + TypeName(prior, i, j))
          .coeffs[L.allocation(i, j)] = 1;
      lp.AddConstraint(Relation::kLessEqual, 1, "x<=1" + TypeName(prior, i, j))
          .coeffs[L.allocation(i, j)] = 1;
    }
  }
  if (prior.mode() != Mode::kDeadlines) {
    for (size_t i = 0; i < L.n; ++i) {
      for (size_t j = 0; j < L.k; ++j) {
        lp.AddConstraint(Relation::kLessEqual, prior.level(j),
                         "budget" + TypeName(prior, i, j))
            .coeffs[L.payment(i, j)] = 1;
      }
    }
  }
  return lp;
}

AuctionMenu MenuFromSolution(const Prior& prior, const LpSolution& sol) {
  const AuctionLayout L{prior.num_values(), prior.num_levels()};
  AuctionMenu menu{Matrix<Rational>(L.n, L.k), Matrix<Rational>(L.n, L.k)};
  for (size_t i = 0; i < L.n; ++i) {
    for (size_t j = 0; j < L.k; ++j) {
      menu.payment(i, j) = sol.x[L.payment(i, j)];
      menu.allocation(i, j) = sol.x[L.allocation(i, j)];
    }
  }
  return menu;
}

Rational MenuRevenue(const Prior& prior, const AuctionMenu& menu) {
  Rational r;
  for (const auto& [i, j] : prior.Support()) {
    r += prior.mass(i, j) * menu.payment(i, j);
  }
  return r;
}

Rational MenuWelfare(const Prior& prior, const AuctionMenu& menu) {
  Rational w;
  for (const auto& [i, j] : prior.Support()) {
    w += prior.mass(i, j) * prior.value(i) * menu.allocation(i, j);
  }
  return w;
}

std::optional<std::string> FindMenuViolation(const Prior& prior,
                                             const AuctionMenu& menu) {
  const size_t n = prior.num_values(), k = prior.num_levels();
  auto utility = [&](size_t i, size_t i2, size_t j2) {
    return prior.value(i) * menu.allocation(i2, j2) - menu.payment(i2, j2);
  };
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < k; ++j) {
      const std::string t = TypeName(prior, i, j);
      const Rational& x = menu.allocation(i, j);
      if (x.sign() < 0 || x > Rational(1)) return "allocation out of [0,1] at " + t;
      if (menu.payment(i, j).sign() < 0) return "negative payment at " + t;
      if (prior.mode() != Mode::kDeadlines && menu.payment(i, j) > prior.level(j)) {
        return "budget exceeded at " + t;
      }
      const Rational u = utility(i, i, j);
      if (u.sign() < 0) return "IR fails at " + t;
      for (size_t i2 = 0; i2 < n; ++i2) {
        if (utility(i, i2, j) > u) {
          return "IC fails: " + t + " prefers " + TypeName(prior, i2, j);
        }
      }
      if (j > 0 && utility(i, i, j - 1) > u) {
        return "IC fails: " + t + " prefers " + TypeName(prior, i, j - 1);
      }
    }
  }
  return std::nullopt;
}

AuctionResult OptimalAuction(const Prior& input) {
  Prior prior = NormalizePrior(input);
  LinearProgram lp = BuildAuctionLp(prior);
  const LpSolution stage1 = SolveLpExact(lp);

  // Among revenue-optimal menus, maximize welfare.
  LinearConstraint& fix =
      lp.AddConstraint(Relation::kEqual, stage1.objective, "revenue=opt");
  fix.coeffs = lp.objective;
  const AuctionLayout L{prior.num_values(), prior.num_levels()};
  std::vector<Rational> welfare(lp.num_variables());
  for (size_t i = 0; i < L.n; ++i) {
    for (size_t j = 0; j < L.k; ++j) {
      welfare[L.allocation(i, j)] = prior.mass(i, j) * prior.value(i);
    }
  }
  lp.objective = welfare;
  const LpSolution stage2 = SolveLpExact(lp);

  AuctionMenu menu = MenuFromSolution(prior, stage2);
  SurplusReport report;
  report.revenue = MenuRevenue(prior, menu);
  if (report.revenue != stage1.objective) {
    throw Error(ErrorCode::kNotOptimal, "welfare stage lost revenue");
  }
  report.welfare = MenuWelfare(prior, menu);
  report.consumer_surplus = report.welfare - report.revenue;
  report.full_welfare = prior.FullWelfare();
  report.opt = report.full_welfare - report.revenue;
  return AuctionResult{std::move(prior), std::move(menu), std::move(report)};
}

Rational OptimalRevenue(const Prior& prior) {
  return SolveLpExact(BuildAuctionLp(NormalizePrior(prior))).objective;
}

SignalOutcome SignalPostedPrice(const Prior& posterior) {
  if (posterior.mode() == Mode::kPrivateBudget) {
    throw Error(ErrorCode::kWrongMode,
                "posted-price signals need public budgets or deadlines");
  }
  const Rational vmin = posterior.MinValue();
  for (size_t i = 0; i < posterior.num_values(); ++i) {
    if (posterior.ValueMass(i).is_zero()) continue;
    const Rational& w = posterior.value(i);
    if (w * posterior.TailMass(w) != vmin) {
      throw Error(ErrorCode::kNotEqualRevenue,
                  "price " + w.ToString() + " earns " +
                      (w * posterior.TailMass(w)).ToString() + ", not " +
                      vmin.ToString());
    }
  }
  if (posterior.mode() == Mode::kDeadlines) {
    // One level per value, levels nondecreasing in value.
    size_t last_level = 0;
    for (size_t i = 0; i < posterior.num_values(); ++i) {
      size_t count = 0, level = 0;
      for (size_t j = 0; j < posterior.num_levels(); ++j) {
        if (!posterior.mass(i, j).is_zero()) {
          ++count;
          level = j;
        }
      }
      if (count == 0) continue;
      if (count > 1 || level < last_level) {
        throw Error(ErrorCode::kNotEqualRevenue,
                    "posterior is not a staircase at value " +
                        posterior.value(i).ToString());
      }
      last_level = level;
    }
  }
  SignalOutcome out;
  out.price = vmin;
  if (posterior.mode() == Mode::kPublicBudget && posterior.budget() < vmin) {
    out.price = posterior.budget();
  }
  out.revenue = out.price;
  out.welfare = posterior.FullWelfare();
  out.consumer_surplus = out.welfare - out.revenue;
  return out;
}

Rational PostedPriceRevenue(const Prior& prior, const Rational& price,
                            std::optional<size_t> level) {
  if (price.sign() <= 0) {
    throw Error(ErrorCode::kBadParameters, "price must be positive");
  }
  if (level) return price * prior.TailMass(price, *level);
  return price * prior.TailMass(price);
}

AnnotatedScheme AnnotateScheme(const SignalingScheme& scheme) {
  AnnotatedScheme out{scheme, {}, {}};
  for (const Signal& s : scheme.signals) {
    SignalOutcome o = SignalPostedPrice(s.posterior);
    out.totals.revenue += s.weight * o.revenue;
    out.totals.welfare += s.weight * o.welfare;
    out.totals.consumer_surplus += s.weight * o.consumer_surplus;
    out.outcomes.push_back(std::move(o));
  }
  out.totals.full_welfare = scheme.parent.FullWelfare();
  out.totals.opt = out.totals.full_welfare - out.totals.revenue;
  return out;
}

}  // namespace seg
