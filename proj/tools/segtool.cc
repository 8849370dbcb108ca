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

// segtool: solve, price, verify and stress buyer-optimal segmentations.
//
// Exit codes: 0 ok, 1 a check failed, 2 bad input or parameters, 3 wrong
// mode for the command, 4 internal verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "seg/auction.h"
#include "seg/canonical.h"
#include "seg/document.h"
#include "seg/error.h"
#include "seg/private_budget.h"
#include "seg/random.h"
#include "seg/signaling.h"
#include "seg/verify.h"

namespace {

using namespace seg;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;
constexpr int kWrongModeExit = 3;
constexpr int kInternal = 4;

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kWrongMode:
      return kWrongModeExit;
    case ErrorCode::kNotOptimal:
    case ErrorCode::kICViolation:
    case ErrorCode::kPropertyViolation:
    case ErrorCode::kNotEqualRevenue:
    case ErrorCode::kExhausted:
    case ErrorCode::kUnbounded:
    case ErrorCode::kInfeasible:
    case ErrorCode::kTooLarge:
      return kInternal;
    default:
      return kBadInput;
  }
}

std::optional<Mode> ModeOption(const std::string& mode) {
  if (mode.empty()) return std::nullopt;
  return ParseMode(mode);
}

PriorDocument LoadPrior(const std::string& path, const std::string& mode) {
  return ParsePriorDocument(ReadJsonFile(path), ModeOption(mode));
}

struct SolveArgs {
  std::string prior;
  std::string out;
  std::string mode;
  bool naive = false;
  bool json = false;
  bool text = false;
};

int Solve(const SolveArgs& args) {
  const Prior prior = LoadPrior(args.prior, args.mode).prior;
  const SignalingScheme scheme =
      args.naive ? NaivePerLevelScheme(prior) : Segment(prior);
  const AnnotatedScheme annotated = AnnotateScheme(scheme);
  const Json doc = SerializeScheme(annotated);
  if (!args.out.empty()) {
    std::ofstream out(args.out);
    if (!out) throw Error(ErrorCode::kParse, "cannot write " + args.out);
    out << doc.dump(2) << "\n";
  }
  if (args.json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << RenderReport(annotated);
  }
  const VerificationReport report = VerifyScheme(scheme);
  if (!report.passed()) {
    std::cerr << report.ToString();
    // The per-level baseline is expected to fail buyer optimality.
    if (!args.naive) return kInternal;
  }
  return kOk;
}

struct AuctionArgs {
  std::string prior;
  std::string mode;
  bool menu = false;
  bool canonical = false;
};

void PrintMenu(const Prior& prior, const AuctionMenu& menu) {
  std::cout << "payments\n" << RenderMatrix(prior, menu.payment)
            << "allocations\n" << RenderMatrix(prior, menu.allocation);
}

int Auction(const AuctionArgs& args) {
  const Prior prior = LoadPrior(args.prior, args.mode).prior;
  const AuctionResult result = OptimalAuction(prior);
  const SurplusReport& r = result.report;
  std::cout << "R=" << r.revenue.ToString() << " W=" << r.welfare.ToString()
            << " CS=" << r.consumer_surplus.ToString()
            << " Wstar=" << r.full_welfare.ToString()
            << " OPT=" << r.opt.ToString() << "\n";
  if (args.menu) PrintMenu(result.prior, result.menu);
  if (!args.canonical) return kOk;

  const Prior& p = result.prior;
  AllocationCurve curve;
  if (p.mode() == Mode::kPublicBudget) {
    curve = CanonicalizePublic(p, result.menu);
  } else if (p.mode() == Mode::kDeadlines) {
    curve = CanonicalizeDeadlines(p, result.menu);
  } else {
    throw Error(ErrorCode::kWrongMode,
                "canonical curves need public budgets or deadlines");
  }
  std::cout << "canonical curve (row i covers [w_i, w_i+1))\n";
  for (size_t i = 0; i < curve.grid.size(); ++i) {
    std::cout << "  w=" << curve.grid[i].ToString() << ":";
    for (size_t j = 0; j < curve.x.cols(); ++j) {
      std::cout << " " << curve.x(i, j).ToString();
    }
    std::cout << "\n";
  }
  if (curve.budget_capped) {
    std::cout << "posted price " << p.budget().ToString()
              << " (budget below every value)\n";
    return kOk;
  }
  const PostedPriceMix mix = Decompose(p, curve);
  std::cout << "posted-price mix\n";
  for (size_t j = 0; j < mix.delta.cols(); ++j) {
    for (size_t i = 0; i < mix.prices.size(); ++i) {
      if (mix.delta(i, j).is_zero()) continue;
      std::cout << "  level " << p.level(j).ToString() << ": price "
                << mix.prices[i].ToString() << " weight "
                << mix.delta(i, j).ToString() << "\n";
    }
  }
  std::cout << "mix revenue " << mix.revenue.ToString() << "\n";
  return mix.revenue == r.revenue ? kOk : kInternal;
}

int Verify(const std::string& prior_path, const std::string& scheme_path) {
  const Prior prior = LoadPrior(prior_path, "").prior;
  const AnnotatedScheme recorded =
      ParseSchemeDocument(ReadJsonFile(scheme_path));
  if (recorded.scheme.parent != prior) {
    std::cout << "FAIL scheme-parent-matches-prior\n";
    return kCheckFailed;
  }
  VerificationReport report = VerifyScheme(recorded.scheme);
  if (report.passed()) {
    const AnnotatedScheme fresh = AnnotateScheme(recorded.scheme);
    report.Add("recorded-outcomes-match", fresh.outcomes == recorded.outcomes &&
                                              fresh.totals == recorded.totals);
  }
  std::cout << report.ToString();
  return report.passed() ? kOk : kCheckFailed;
}

struct CounterexampleArgs {
  std::string M;
  std::string delta;
  std::string epsilon;
};

int Counterexample(const CounterexampleArgs& args) {
  if (!args.epsilon.empty()) {
    if (!args.M.empty() || !args.delta.empty()) {
      throw Error(ErrorCode::kBadParameters,
                  "use either --epsilon or --M with --delta");
    }
    const Rational eps = Rational::Parse(args.epsilon);
    const VerificationReport report = GapReport(eps);
    const CounterexampleInstance first =
        MakeCounterexample(Rational(1) / eps, eps / Rational(2));
    const Rational ratio =
        EfficientSchemeCs(first) / ClosedFormOptimal(first).report.opt;
    std::cout << "efficient CS / OPT = " << ratio.ToString() << "\n"
              << report.ToString();
    return report.passed() ? kOk : kCheckFailed;
  }
  if (args.M.empty() || args.delta.empty()) {
    throw Error(ErrorCode::kBadParameters,
                "--M and --delta are required without --epsilon");
  }
  const CounterexampleInstance inst = MakeCounterexample(
      Rational::Parse(args.M), Rational::Parse(args.delta));
  const ClosedFormAuction cf = ClosedFormOptimal(inst);
  std::cout << "instance M=" << inst.M.ToString()
            << " delta=" << inst.delta.ToString() << "\n"
            << RenderMatrix(inst.prior, inst.prior.masses());
  PrintMenu(inst.prior, cf.menu);
  std::cout << "R=" << cf.report.revenue.ToString()
            << " (LP " << cf.lp_revenue.ToString() << ")"
            << " OPT=" << cf.report.opt.ToString() << "\n"
            << "efficient CS = " << EfficientSchemeCs(inst).ToString() << "\n";
  if (inst.M == Rational(2)) {
    const MaxCsResult best = MaxCsScheme(inst);
    std::cout << "max CS = " << best.surplus.ToString() << " (g11="
              << best.weights.g11.ToString()
              << " g22=" << best.weights.g22.ToString()
              << " g31=" << best.weights.g31.ToString()
              << " g32=" << best.weights.g32.ToString() << ")\n";
  }
  return kOk;
}

struct FuzzArgs {
  uint64_t seed = 1;
  int count = 100;
  std::string mode;
};

int Fuzz(const FuzzArgs& args) {
  Rng rng(args.seed);
  std::vector<Mode> modes = {Mode::kPublicBudget, Mode::kDeadlines};
  if (auto m = ModeOption(args.mode)) modes = {*m};
  int failures = 0;
  for (int it = 0; it < args.count; ++it) {
    PriorGenOptions options;
    options.mode = modes[static_cast<size_t>(it) % modes.size()];
    const Prior prior = RandomPrior(rng, options);
    VerificationReport report = VerifyScheme(Segment(prior));
    report.Append(CheckSellerFloor(RandomPlausibleScheme(rng, prior)));
    if (!report.passed()) {
      ++failures;
      std::cout << "instance " << it << " failed\n"
                << SerializePrior(prior).dump() << "\n"
                << report.ToString();
    }
  }
  std::cout << args.count - failures << "/" << args.count << " passed\n";
  return failures == 0 ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact buyer-optimal segmentation tools"};
  app.require_subcommand(1);

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Segment a prior");
  solve_cmd->add_option("prior", solve.prior, "Prior document")->required();
  solve_cmd->add_option("--out", solve.out, "Write the scheme document here");
  solve_cmd->add_option("--mode", solve.mode, "Override the prior's mode");
  solve_cmd->add_flag("--naive", solve.naive,
                      "Segment each deadline separately");
  auto* json_flag =
      solve_cmd->add_flag("--json", solve.json, "Print the scheme document");
  solve_cmd->add_flag("--text", solve.text, "Print the timeline report")
      ->excludes(json_flag);

  AuctionArgs auction;
  CLI::App* auction_cmd =
      app.add_subcommand("auction", "Optimal mechanism for a prior");
  auction_cmd->add_option("prior", auction.prior, "Prior document")->required();
  auction_cmd->add_option("--mode", auction.mode, "Override the prior's mode");
  auction_cmd->add_flag("--menu", auction.menu, "Print payments and allocations");
  auction_cmd->add_flag("--canonical", auction.canonical,
                        "Canonicalize and decompose into posted prices");

  std::string verify_prior, verify_scheme;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check a scheme against a prior");
  verify_cmd->add_option("prior", verify_prior, "Prior document")->required();
  verify_cmd->add_option("scheme", verify_scheme, "Scheme document")
      ->required();

  CounterexampleArgs ce;
  CLI::App* ce_cmd = app.add_subcommand(
      "counterexample", "Two-type private-budget instances");
  ce_cmd->add_option("--M", ce.M, "High value, > 1");
  ce_cmd->add_option("--delta", ce.delta, "High type's mass, in (0, 1/M)");
  ce_cmd->add_option("--epsilon", ce.epsilon, "Gap parameter in (0, 1/2)");

  FuzzArgs fuzz;
  CLI::App* fuzz_cmd =
      app.add_subcommand("fuzz", "Verify segmentations of random priors");
  fuzz_cmd->add_option("--seed", fuzz.seed, "Generator seed");
  fuzz_cmd->add_option("--count", fuzz.count, "Number of priors")
      ->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--mode", fuzz.mode, "Restrict to one mode");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*solve_cmd) return Solve(solve);
    if (*auction_cmd) return Auction(auction);
    if (*verify_cmd) return Verify(verify_prior, verify_scheme);
    if (*ce_cmd) return Counterexample(ce);
    if (*fuzz_cmd) return Fuzz(fuzz);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  }
  return kBadInput;
}
