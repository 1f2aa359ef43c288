// Copyright 2026 The rslist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RSLIST_JSON_IO_H_
#define RSLIST_JSON_IO_H_

#include <istream>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "rslist/certify.h"
#include "rslist/harness.h"
#include "rslist/hypergraph.h"

namespace rslist::io {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Adds the top-level "schema" field.
Json Document(Json body);

Json ReadJson(std::istream& in);

// {"t": int, "edges": [[int, ...], ...]} with 1-based vertices.
Hypergraph ParseHypergraph(const Json& j);
Json ToJson(const Hypergraph& h);

// {"n", "k", "sets": [[...], ...]} (one row per set) or
// {"n", "k", "entries": [{"set": [...], "multiplicity": m}, ...]}.
ZeroPattern ParseZeroPattern(const Json& j);
Json ToJson(const ZeroPattern& zp);

// Comma-separated canonical encodings, each checked against the field.
std::vector<FieldElement> ParseElementList(std::string_view text, const Field& field);

Json ToJson(const std::vector<FieldElement>& v);
Json ToJson(const Matrix& m);
Json ToJson(const Partition& p);
Json ToJson(const Orientation& o);
Json ToJson(const CertificateResult& c);
Json ToJson(const CertificateBudget& b);
Json ToJson(const BadList& b);
Json ToJson(const OracleStats& s);
Json ToJson(const ValidateReport& r);
Json ToJson(const TrialResult& t);
Json ToJson(const TrialReport& r, bool include_trials = true);
Json ToJson(const BlowupResult& b);
Json ToJson(const GmMdsWitness& w);

}  // namespace rslist::io

#endif  // RSLIST_JSON_IO_H_
