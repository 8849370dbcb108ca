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

#include "seg/rational.h"

#include <cctype>

#include "seg/error.h"

namespace seg {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPositiveValue: return "NonPositiveValue";
    case ErrorCode::kEmptySupport: return "EmptySupport";
    case ErrorCode::kBadBudgetOrder: return "BadBudgetOrder";
    case ErrorCode::kNegativeMass: return "NegativeMass";
    case ErrorCode::kBadShape: return "BadShape";
    case ErrorCode::kLevelOutOfRange: return "LevelOutOfRange";
    case ErrorCode::kBadSupport: return "BadSupport";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kUnbounded: return "Unbounded";
    case ErrorCode::kNotEqualRevenue: return "NotEqualRevenue";
    case ErrorCode::kNotOptimal: return "NotOptimal";
    case ErrorCode::kICViolation: return "ICViolation";
    case ErrorCode::kPropertyViolation: return "PropertyViolation";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kExhausted: return "Exhausted";
    case ErrorCode::kWrongMode: return "WrongMode";
    case ErrorCode::kBadParameters: return "BadParameters";
    case ErrorCode::kWrongM: return "WrongM";
    case ErrorCode::kBadEpsilon: return "BadEpsilon";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

Rational::Rational(int64_t n) {
  q_ = static_cast<long>(n);
}

Rational::Rational(int64_t num, int64_t den) {
  if (den == 0) throw Error(ErrorCode::kBadParameters, "zero denominator");
  q_ = mpq_class(mpz_class(static_cast<long>(num)),
                 mpz_class(static_cast<long>(den)));
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::kBadParameters, "division by zero");
  q_ /= o.q_;
  return *this;
}

namespace {

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::Parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const size_t slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : s.substr(slash + 1);
  if (!IsDigits(num) || !IsDigits(den)) {
    throw Error(ErrorCode::kParse,
                "not a rational: '" + std::string(text) + "'");
  }
  mpz_class n{std::string(num)};
  mpz_class d{std::string(den)};
  if (d == 0) {
    throw Error(ErrorCode::kParse,
                "zero denominator: '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

std::string Rational::ToString() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace seg
