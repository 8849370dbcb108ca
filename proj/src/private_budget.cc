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

#include "seg/private_budget.h"

#include "seg/error.h"
#include "seg/lp.h"

namespace seg {

CounterexampleInstance MakeCounterexample(const Rational& M,
                                          const Rational& delta) {
  if (!(M > Rational(1))) {
    throw Error(ErrorCode::kBadParameters, "M must exceed 1");
  }
  if (delta.sign() <= 0 || !(delta * M < Rational(1))) {
    throw Error(ErrorCode::kBadParameters, "delta must lie in (0, 1/M)");
  }
  const Rational low = Rational(1) - delta;
  MassMatrix mass(2, 2);
  mass(0, 0) = low;
  mass(1, 1) = delta;
  return CounterexampleInstance{
      M, delta,
      Prior(Mode::kPrivateBudget, {Rational(1), M}, {low, M}, std::move(mass))};
}

ClosedFormAuction ClosedFormOptimal(const CounterexampleInstance& inst) {
  const Rational& M = inst.M;
  const Rational& d = inst.delta;
  const Rational one(1);
  const Rational p1 = one - d, x1 = one - d;
  const Rational p2 = d * M + one - d, x2 = one;

  AuctionMenu menu{Matrix<Rational>(2, 2), Matrix<Rational>(2, 2)};
  menu.payment(0, 0) = p1;
  menu.allocation(0, 0) = x1;
  menu.payment(0, 1) = p1;
  menu.allocation(0, 1) = x1;
  menu.payment(1, 0) = p1;
  menu.allocation(1, 0) = x1;
  menu.payment(1, 1) = p2;
  menu.allocation(1, 1) = x2;
  if (auto v = FindMenuViolation(inst.prior, menu)) {
    throw Error(ErrorCode::kICViolation, "closed-form menu: " + *v);
  }

  SurplusReport report;
  report.revenue = MenuRevenue(inst.prior, menu);
  report.welfare = MenuWelfare(inst.prior, menu);
  report.consumer_surplus = report.welfare - report.revenue;
  report.full_welfare = inst.prior.FullWelfare();
  report.opt = report.full_welfare - report.revenue;

  const Rational lp = OptimalRevenue(inst.prior);
  if (lp != report.revenue) {
    throw Error(ErrorCode::kNotOptimal, "closed form earns " +
                                            report.revenue.ToString() +
                                            ", LP optimum " + lp.ToString());
  }
  return ClosedFormAuction{std::move(menu), std::move(report), lp};
}

SignalCase AnalyzeSignal(const CounterexampleInstance& inst, const Rational& g1,
                         const Rational& g2) {
  if (g1.sign() < 0 || g2.sign() < 0 || (g1 + g2).is_zero()) {
    throw Error(ErrorCode::kBadParameters, "signal masses must be nonnegative");
  }
  MassMatrix mass(2, 2);
  mass(0, 0) = g1 / (g1 + g2);
  mass(1, 1) = g2 / (g1 + g2);
  const Prior posterior(Mode::kPrivateBudget, inst.prior.values(),
                        inst.prior.levels(), std::move(mass));
  const AuctionResult a = OptimalAuction(posterior);
  SignalCase out;
  out.revenue = a.report.revenue;
  out.welfare = a.report.welfare;
  out.consumer_surplus = a.report.consumer_surplus;
  // The normalized grid drops the low value when g1 = 0.
  if (!g1.is_zero()) {
    out.low_payment = a.menu.payment(0, 0);
    out.low_allocation = a.menu.allocation(0, 0);
  }
  return out;
}

Rational EfficientSchemeCs(const CounterexampleInstance& inst) {
  const Rational& d = inst.delta;
  const Rational closed = (Rational(1) - d) * d;
  // Separating scheme: each pure signal is efficient.
  const SignalCase low = AnalyzeSignal(inst, Rational(1), Rational(0));
  const SignalCase high = AnalyzeSignal(inst, Rational(0), Rational(1));
  if (low.low_allocation != Rational(1)) {
    throw Error(ErrorCode::kNotOptimal, "pure low signal is not efficient");
  }
  const Rational separated =
      (Rational(1) - d) * low.consumer_surplus + d * high.consumer_surplus;
  if (separated != closed) {
    throw Error(ErrorCode::kNotOptimal,
                "separating scheme surplus " + separated.ToString() +
                    " differs from " + closed.ToString());
  }
  const Rational opt = ClosedFormOptimal(inst).report.opt;
  if (closed != opt / inst.M) {
    throw Error(ErrorCode::kNotOptimal, "efficient surplus is not OPT / M");
  }
  return closed;
}

MaxCsResult MaxCsScheme(const CounterexampleInstance& inst, bool separate) {
  if (inst.M != Rational(2)) {
    throw Error(ErrorCode::kWrongM, "the surplus LP is instantiated at M = 2");
  }
  const Rational& d = inst.delta;
  const Rational one(1);
  LinearProgram lp;
  const size_t g11 = lp.AddVariable("g11", d);
  const size_t g22 = lp.AddVariable("g22");
  const size_t g31 = lp.AddVariable("g31");
  const size_t g32 = lp.AddVariable("g32", one - d);

  LinearConstraint& low = lp.AddConstraint(Relation::kEqual, one - d, "low");
  low.coeffs[g11] = one;
  low.coeffs[g31] = one;
  LinearConstraint& high = lp.AddConstraint(Relation::kEqual, d, "high");
  high.coeffs[g22] = one;
  high.coeffs[g32] = one;
  // Mixed signals keep the parent menu only with g31 >= (M - 1) g32.
  LinearConstraint& keep = lp.AddConstraint(Relation::kGreaterEqual, 0, "keep");
  keep.coeffs[g31] = one;
  keep.coeffs[g32] = -(inst.M - one);
  if (separate) {
    lp.AddConstraint(Relation::kEqual, 0, "separate").coeffs[g32] = one;
  }
  const LpSolution sol = SolveLpExact(lp);
  return MaxCsResult{{sol.x[g11], sol.x[g22], sol.x[g31], sol.x[g32]},
                     sol.objective};
}

VerificationReport GapReport(const Rational& epsilon) {
  if (epsilon.sign() <= 0 || !(epsilon < Rational(1, 2))) {
    throw Error(ErrorCode::kBadEpsilon, "epsilon must lie in (0, 1/2)");
  }
  VerificationReport report;
  {
    const CounterexampleInstance inst =
        MakeCounterexample(Rational(1) / epsilon, epsilon / Rational(2));
    const Rational opt = ClosedFormOptimal(inst).report.opt;
    const Rational cs = EfficientSchemeCs(inst);
    report.Add("efficient-cs/OPT", cs / opt == epsilon, (cs / opt).ToString(),
               epsilon.ToString(),
               "M = " + inst.M.ToString() + ", delta = " + inst.delta.ToString());
    report.Add("efficient-cs-at-most-eps-OPT", cs <= epsilon * opt,
               cs.ToString(), (epsilon * opt).ToString(), "", "<=");
  }
  {
    const CounterexampleInstance inst = MakeCounterexample(
        Rational(2), Rational(1, 2) - epsilon / Rational(2));
    const Rational& d = inst.delta;
    const Rational opt = ClosedFormOptimal(inst).report.opt;
    const MaxCsResult best = MaxCsScheme(inst);
    const Rational closed = d * (Rational(2) - Rational(3) * d);
    report.Add("max-cs-closed-form", best.surplus == closed,
               best.surplus.ToString(), closed.ToString(),
               "M = 2, delta = " + d.ToString());
    const Rational bound = (Rational(1, 2) + epsilon) * opt;
    report.Add("max-cs-below-half-plus-eps-OPT", best.surplus < bound,
               best.surplus.ToString(), bound.ToString(), "", "<");
  }
  return report;
}

}  // namespace seg
