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

// JSON documents for priors and schemes. Every number is an exact rational
// string ("p/q" or an integer).

#ifndef SEG_DOCUMENT_H_
#define SEG_DOCUMENT_H_

#include <optional>
#include <string>

#include "json.hpp"
#include "seg/prior.h"
#include "seg/scheme.h"

namespace seg {

using Json = nlohmann::ordered_json;

struct PriorDocument {
  std::string label;
  Prior prior;  // normalized
};

// Fields: mode, optional label, values, one of budget / budgets /
// deadlineCount, and mass as a values-by-levels matrix (a flat list is
// accepted in public mode). Repeated values are merged. `mode_override`
// replaces the document's mode. Throws Error(kParse) on malformed JSON and
// the Prior errors on a bad grid.
PriorDocument ParsePriorDocument(const Json& doc,
                                 std::optional<Mode> mode_override = {});
Json SerializePrior(const Prior& prior, const std::string& label = "");

// Fields: parent (a prior document), signals [{weight, posterior,
// postedPrice, revenue, consumerSurplus}], totals {R, W, CS, Wstar, OPT},
// eventTimeline [{t, exhaustedTypes [{value, level}]}].
Json SerializeScheme(const AnnotatedScheme& scheme);
AnnotatedScheme ParseSchemeDocument(const Json& doc);

// Reads and parses a JSON file; throws Error(kParse).
Json ReadJsonFile(const std::string& path);

// Timeline of residual priors and weight-multiplied signals per interval,
// then the line "R=... W=... CS=...".
std::string RenderReport(const AnnotatedScheme& scheme);
std::string TotalsLine(const SurplusReport& totals);

// Mass matrix as an aligned table with value rows and level columns.
std::string RenderMatrix(const Prior& grid, const MassMatrix& mass);

}  // namespace seg

#endif  // SEG_DOCUMENT_H_
