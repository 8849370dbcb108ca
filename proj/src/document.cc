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

#include "seg/document.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "seg/error.h"

namespace seg {
namespace {

[[noreturn]] void Fail(const std::string& what) {
  throw Error(ErrorCode::kParse, what);
}

Rational ParseRational(const Json& j, const std::string& where) {
  if (j.is_string()) return Rational::Parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<int64_t>());
  Fail(where + ": expected a rational string");
}

const Json& Field(const Json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) Fail(std::string("missing field '") + name + "'");
  return *it;
}

std::vector<Rational> ParseList(const Json& j, const std::string& where) {
  if (!j.is_array()) Fail(where + ": expected a list");
  std::vector<Rational> out;
  for (const Json& e : j) out.push_back(ParseRational(e, where));
  return out;
}

std::vector<Rational> ParseLevels(const Json& doc, Mode mode) {
  switch (mode) {
    case Mode::kPublicBudget:
      return {ParseRational(Field(doc, "budget"), "budget")};
    case Mode::kPrivateBudget:
      return ParseList(Field(doc, "budgets"), "budgets");
    case Mode::kDeadlines:
      if (doc.contains("deadlines")) {
        return ParseList(doc["deadlines"], "deadlines");
      }
      {
        const Json& k = Field(doc, "deadlineCount");
        if (!k.is_number_integer() || k.get<int64_t>() <= 0) {
          Fail("deadlineCount must be a positive integer");
        }
        return DeadlineLabels(k.get<size_t>());
      }
  }
  Fail("unknown mode");
}

MassMatrix ParseMass(const Json& j, size_t n, size_t k, Mode mode) {
  if (!j.is_array() || j.size() != n) {
    Fail("mass must have one row per value");
  }
  MassMatrix mass(n, k);
  for (size_t i = 0; i < n; ++i) {
    const Json& row = j[i];
    if (!row.is_array()) {
      if (mode != Mode::kPublicBudget) Fail("mass rows must be lists");
      mass(i, 0) = ParseRational(row, "mass");
      continue;
    }
    if (row.size() != k) Fail("mass row has the wrong number of levels");
    for (size_t c = 0; c < k; ++c) mass(i, c) = ParseRational(row[c], "mass");
  }
  return mass;
}

Json ListJson(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const Rational& x : xs) out.push_back(x.ToString());
  return out;
}

Json MassJson(const MassMatrix& mass) {
  Json out = Json::array();
  for (size_t i = 0; i < mass.rows(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < mass.cols(); ++j) {
      row.push_back(mass(i, j).ToString());
    }
    out.push_back(std::move(row));
  }
  return out;
}

size_t IndexOf(const std::vector<Rational>& xs, const Rational& x,
               const char* what) {
  auto it = std::find(xs.begin(), xs.end(), x);
  if (it == xs.end()) Fail(std::string("unknown ") + what + " " + x.ToString());
  return static_cast<size_t>(it - xs.begin());
}

}  // namespace

PriorDocument ParsePriorDocument(const Json& doc,
                                 std::optional<Mode> mode_override) {
  if (!doc.is_object()) Fail("prior document must be an object");
  Mode mode;
  if (mode_override) {
    mode = *mode_override;
  } else {
    const Json& m = Field(doc, "mode");
    if (!m.is_string()) Fail("mode must be a string");
    mode = ParseMode(m.get<std::string>());
  }
  std::string label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) Fail("label must be a string");
    label = doc["label"].get<std::string>();
  }
  const std::vector<Rational> values = ParseList(Field(doc, "values"), "values");
  const std::vector<Rational> levels = ParseLevels(doc, mode);
  const MassMatrix mass =
      ParseMass(Field(doc, "mass"), values.size(), levels.size(), mode);

  RawPrior raw{mode, levels, {}};
  for (size_t i = 0; i < values.size(); ++i) {
    for (size_t j = 0; j < levels.size(); ++j) {
      raw.types.push_back({values[i], j, mass(i, j)});
    }
  }
  return PriorDocument{label, NormalizePrior(raw)};
}

Json SerializePrior(const Prior& prior, const std::string& label) {
  Json out;
  out["mode"] = std::string(ModeName(prior.mode()));
  if (!label.empty()) out["label"] = label;
  out["values"] = ListJson(prior.values());
  switch (prior.mode()) {
    case Mode::kPublicBudget:
      out["budget"] = prior.budget().ToString();
      break;
    case Mode::kPrivateBudget:
      out["budgets"] = ListJson(prior.levels());
      break;
    case Mode::kDeadlines:
      if (prior.levels() == DeadlineLabels(prior.num_levels())) {
        out["deadlineCount"] = prior.num_levels();
      } else {
        out["deadlines"] = ListJson(prior.levels());
      }
      break;
  }
  out["mass"] = MassJson(prior.masses());
  return out;
}

Json SerializeScheme(const AnnotatedScheme& scheme) {
  const Prior& parent = scheme.scheme.parent;
  Json out;
  out["parent"] = SerializePrior(parent);
  Json signals = Json::array();
  for (size_t h = 0; h < scheme.scheme.signals.size(); ++h) {
    const Signal& s = scheme.scheme.signals[h];
    const SignalOutcome& o = scheme.outcomes.at(h);
    Json sig;
    sig["weight"] = s.weight.ToString();
    sig["posterior"] = MassJson(s.posterior.masses());
    sig["postedPrice"] = o.price.ToString();
    sig["revenue"] = o.revenue.ToString();
    sig["welfare"] = o.welfare.ToString();
    sig["consumerSurplus"] = o.consumer_surplus.ToString();
    signals.push_back(std::move(sig));
  }
  out["signals"] = std::move(signals);
  const SurplusReport& t = scheme.totals;
  out["totals"] = {{"R", t.revenue.ToString()},
                   {"W", t.welfare.ToString()},
                   {"CS", t.consumer_surplus.ToString()},
                   {"Wstar", t.full_welfare.ToString()},
                   {"OPT", t.opt.ToString()}};
  Json timeline = Json::array();
  for (const ExhaustionEvent& e : scheme.scheme.events) {
    Json types = Json::array();
    for (const auto& [i, j] : e.exhausted) {
      types.push_back({{"value", parent.value(i).ToString()},
                       {"level", parent.level(j).ToString()}});
    }
    timeline.push_back({{"t", e.time.ToString()}, {"exhaustedTypes", types}});
  }
  out["eventTimeline"] = std::move(timeline);
  return out;
}

AnnotatedScheme ParseSchemeDocument(const Json& doc) {
  if (!doc.is_object()) Fail("scheme document must be an object");
  AnnotatedScheme out{
      SignalingScheme{ParsePriorDocument(Field(doc, "parent")).prior, {}, {}},
      {},
      {}};
  const Prior& parent = out.scheme.parent;
  const Json& signals = Field(doc, "signals");
  if (!signals.is_array()) Fail("signals must be a list");
  for (const Json& s : signals) {
    if (!s.is_object()) Fail("signal must be an object");
    MassMatrix mass = ParseMass(Field(s, "posterior"), parent.num_values(),
                                parent.num_levels(), parent.mode());
    out.scheme.signals.push_back(
        {ParseRational(Field(s, "weight"), "weight"),
         Prior(parent.mode(), parent.values(), parent.levels(),
               std::move(mass))});
    SignalOutcome o;
    o.price = ParseRational(Field(s, "postedPrice"), "postedPrice");
    o.revenue = ParseRational(Field(s, "revenue"), "revenue");
    o.consumer_surplus =
        ParseRational(Field(s, "consumerSurplus"), "consumerSurplus");
    o.welfare = s.contains("welfare") ? ParseRational(s["welfare"], "welfare")
                                      : o.revenue + o.consumer_surplus;
    out.outcomes.push_back(o);
  }
  const Json& t = Field(doc, "totals");
  out.totals.revenue = ParseRational(Field(t, "R"), "R");
  out.totals.welfare = ParseRational(Field(t, "W"), "W");
  out.totals.consumer_surplus = ParseRational(Field(t, "CS"), "CS");
  out.totals.full_welfare = ParseRational(Field(t, "Wstar"), "Wstar");
  out.totals.opt = ParseRational(Field(t, "OPT"), "OPT");
  if (doc.contains("eventTimeline")) {
    for (const Json& e : doc["eventTimeline"]) {
      ExhaustionEvent ev{ParseRational(Field(e, "t"), "t"), {}};
      for (const Json& ty : Field(e, "exhaustedTypes")) {
        ev.exhausted.emplace_back(
            IndexOf(parent.values(), ParseRational(Field(ty, "value"), "value"),
                    "value"),
            IndexOf(parent.levels(), ParseRational(Field(ty, "level"), "level"),
                    "level"));
      }
      out.scheme.events.push_back(std::move(ev));
    }
  }
  return out;
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    Fail(path + ": " + e.what());
  }
}

std::string RenderMatrix(const Prior& grid, const MassMatrix& mass) {
  const size_t n = grid.num_values(), k = grid.num_levels();
  std::vector<std::vector<std::string>> cells(n + 1,
                                              std::vector<std::string>(k + 1));
  cells[0][0] = grid.mode() == Mode::kDeadlines ? "v\\d" : "v\\b";
  for (size_t j = 0; j < k; ++j) cells[0][j + 1] = grid.level(j).ToString();
  for (size_t i = 0; i < n; ++i) {
    cells[i + 1][0] = grid.value(i).ToString();
    for (size_t j = 0; j < k; ++j) cells[i + 1][j + 1] = mass(i, j).ToString();
  }
  std::vector<size_t> width(k + 1, 0);
  for (const auto& row : cells) {
    for (size_t c = 0; c <= k; ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    os << "  " << row[0] << std::string(width[0] - row[0].size(), ' ');
    for (size_t c = 1; c <= k; ++c) {
      os << "  " << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    os << "\n";
  }
  return os.str();
}

std::string TotalsLine(const SurplusReport& totals) {
  return "R=" + totals.revenue.ToString() + " W=" + totals.welfare.ToString() +
         " CS=" + totals.consumer_surplus.ToString();
}

std::string RenderReport(const AnnotatedScheme& scheme) {
  const Prior& parent = scheme.scheme.parent;
  const bool timeline = !scheme.scheme.events.empty();
  std::ostringstream os;
  os << "prior (" << ModeName(parent.mode()) << ")\n"
     << RenderMatrix(parent, parent.masses());
  MassMatrix residual = parent.masses();
  Rational t;
  for (size_t h = 0; h < scheme.scheme.signals.size(); ++h) {
    const Signal& s = scheme.scheme.signals[h];
    MassMatrix weighted = s.posterior.masses();
    for (size_t i = 0; i < weighted.rows(); ++i) {
      for (size_t j = 0; j < weighted.cols(); ++j) weighted(i, j) *= s.weight;
    }
    os << "\n";
    if (timeline) {
      os << "interval " << h + 1 << ": t in [" << t.ToString() << ", "
         << (t + s.weight).ToString() << ")\n"
         << "residual D(" << t.ToString() << ")\n"
         << RenderMatrix(parent, residual);
    }
    os << "signal S_" << h + 1 << " x weight " << s.weight.ToString() << "\n"
       << RenderMatrix(parent, weighted);
    if (h < scheme.outcomes.size()) {
      const SignalOutcome& o = scheme.outcomes[h];
      os << "posted price " << o.price.ToString() << ", revenue "
         << o.revenue.ToString() << ", CS " << o.consumer_surplus.ToString()
         << "\n";
    }
    for (size_t i = 0; i < residual.rows(); ++i) {
      for (size_t j = 0; j < residual.cols(); ++j) {
        residual(i, j) -= weighted(i, j);
      }
    }
    t += s.weight;
  }
  os << "\n" << TotalsLine(scheme.totals) << "\n";
  return os.str();
}

}  // namespace seg
