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

#include "rslist/json_io.h"

#include <charconv>
#include <string>

namespace rslist::io {

namespace {

[[noreturn]] void Fail(const std::string& what) { throw Error(ErrorCode::kParseError, what); }

std::uint64_t AsCount(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    Fail(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

Json Indices(std::span<const std::size_t> v) {
  Json out = Json::array();
  for (std::size_t i : v) out.push_back(i + 1);
  return out;
}

Json Vertices(VertexSet s) {
  Json out = Json::array();
  for (int v : Members(s)) out.push_back(v + 1);
  return out;
}

Json Coordinates(std::uint64_t s) {
  Json out = Json::array();
  for (int i = 0; i < 64; ++i) {
    if (s >> i & 1) out.push_back(i + 1);
  }
  return out;
}

std::uint64_t ParseCoordinates(const Json& j, std::size_t n) {
  if (!j.is_array()) Fail("a set must be an array of coordinates");
  std::uint64_t s = 0;
  for (const Json& x : j) {
    const std::uint64_t i = AsCount(x, "coordinate");
    if (i < 1 || i > n) Fail("coordinate " + std::to_string(i) + " outside [1, n]");
    s |= std::uint64_t{1} << (i - 1);
  }
  return s;
}

std::string RationalString(const BigRational& x) {
  return boost::multiprecision::numerator(x).str() + "/" +
         boost::multiprecision::denominator(x).str();
}

}  // namespace

Json Document(Json body) {
  Json out = {{"schema", kSchemaVersion}};
  for (auto& [key, value] : body.items()) out[key] = value;
  return out;
}

Json ReadJson(std::istream& in) {
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    Fail(std::string("malformed JSON: ") + e.what());
  }
}

Hypergraph ParseHypergraph(const Json& j) {
  if (!j.is_object() || !j.contains("t") || !j.contains("edges")) {
    Fail("hypergraph needs fields \"t\" and \"edges\"");
  }
  const std::uint64_t t = AsCount(j.at("t"), "t");
  if (t < 1 || t > static_cast<std::uint64_t>(kMaxVertices)) {
    throw Error(ErrorCode::kTooManyVertices, "t must be in [1, 32]");
  }
  if (!j.at("edges").is_array()) Fail("\"edges\" must be an array");
  std::vector<VertexSet> edges;
  for (const Json& e : j.at("edges")) {
    if (!e.is_array()) Fail("each edge must be an array of vertices");
    VertexSet s = 0;
    for (const Json& v : e) {
      const std::uint64_t x = AsCount(v, "vertex");
      if (x < 1 || x > t) Fail("vertex " + std::to_string(x) + " outside [1, t]");
      const VertexSet bit = VertexSet{1} << (x - 1);
      if (s & bit) Fail("vertex " + std::to_string(x) + " repeated in an edge");
      s |= bit;
    }
    edges.push_back(s);
  }
  return Hypergraph(static_cast<int>(t), std::move(edges));
}

Json ToJson(const Hypergraph& h) {
  Json edges = Json::array();
  for (VertexSet e : h.edges()) edges.push_back(Vertices(e));
  return {{"t", h.t()}, {"edges", edges}};
}

ZeroPattern ParseZeroPattern(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("k")) {
    Fail("zero pattern needs fields \"n\" and \"k\"");
  }
  ZeroPattern zp;
  zp.n = AsCount(j.at("n"), "n");
  zp.k = AsCount(j.at("k"), "k");
  if (zp.n > 64) throw Error(ErrorCode::kDimensionError, "zero patterns support n <= 64");
  if (j.contains("sets")) {
    for (const Json& s : j.at("sets")) zp.entries.push_back({ParseCoordinates(s, zp.n), 1, -1});
  } else if (j.contains("entries")) {
    for (const Json& e : j.at("entries")) {
      if (!e.is_object() || !e.contains("set")) Fail("entry needs a \"set\"");
      const std::size_t mult = e.contains("multiplicity") ? AsCount(e.at("multiplicity"), "multiplicity") : 1;
      const int vertex = e.contains("vertex") && e.at("vertex").is_number_integer()
                             ? e.at("vertex").get<int>() - 1
                             : -1;
      zp.entries.push_back({ParseCoordinates(e.at("set"), zp.n), mult, vertex});
    }
  } else {
    Fail("zero pattern needs \"sets\" or \"entries\"");
  }
  return zp;
}

Json ToJson(const ZeroPattern& zp) {
  Json entries = Json::array();
  for (const auto& e : zp.entries) {
    Json entry = {{"set", Coordinates(e.set)}, {"multiplicity", e.multiplicity}};
    entry["vertex"] = e.vertex >= 0 ? Json(e.vertex + 1) : Json(nullptr);
    entries.push_back(entry);
  }
  return {{"n", zp.n}, {"k", zp.k}, {"entries", entries}, {"rows", zp.total_multiplicity()}};
}

std::vector<FieldElement> ParseElementList(std::string_view text, const Field& field) {
  std::vector<FieldElement> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      Fail("bad field element \"" + std::string(item) + "\"");
    }
    out.push_back(field.Element(value));
    pos = comma + 1;
  }
  return out;
}

Json ToJson(const std::vector<FieldElement>& v) {
  Json out = Json::array();
  for (FieldElement x : v) out.push_back(x.value);
  return out;
}

Json ToJson(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).value);
    out.push_back(row);
  }
  return out;
}

Json ToJson(const Partition& p) {
  Json out = Json::array();
  for (VertexSet b : p.blocks()) out.push_back(Vertices(b));
  return out;
}

Json ToJson(const Orientation& o) {
  Json heads = Json::array();
  for (int h : o.heads) heads.push_back(h >= 0 ? Json(h + 1) : Json(nullptr));
  return {{"root", o.root + 1}, {"heads", heads}};
}

Json ToJson(const CertificateResult& c) {
  Json out;
  out["certificate"] = c.certificate ? Indices(c.certificate->indices) : Json("bottom");
  out["descents"] = c.descents;
  out["refreshes"] = c.refreshes;
  out["probe_count"] = c.probe_count;
  return out;
}

Json ToJson(const CertificateBudget& b) {
  Json out;
  out["count_bound"] = b.count_bound.str();
  out["per_cert_bound"] = RationalString(b.per_cert_bound);
  out["union_bound"] = RationalString(b.union_bound);
  out["log2_per_cert_bound"] = b.per_cert_bound > 0 ? Json(Log2(b.per_cert_bound)) : Json(nullptr);
  out["log2_union_bound"] = b.union_bound > 0 ? Json(Log2(b.union_bound)) : Json(nullptr);
  out["log2_target"] = Log2(b.target);
  out["union_status"] = b.vacuous() ? "vacuous" : (b.meets_target() ? "meets_target" : "above_target");
  return out;
}

Json ToJson(const BadList& b) {
  Json messages = Json::array();
  for (std::uint64_t m : b.messages) messages.push_back(m);
  return {{"y", ToJson(b.y)}, {"messages", messages}, {"total_distance", b.total_distance}};
}

Json ToJson(const OracleStats& s) {
  return {{"mode", OracleModeName(s.mode)},
          {"subsets_examined", s.subsets_examined},
          {"flagged", s.flagged},
          {"coverage", s.coverage}};
}

Json ToJson(const ValidateReport& r) {
  return {{"oracle", ToJson(r.oracle)},       {"bad_lists", r.bad_lists},
          {"filtered", r.filtered},           {"extracted", r.extracted},
          {"wpc", r.wpc},                     {"rank_deficient", r.rank_deficient},
          {"failures", 0},                    {"seconds", r.seconds}};
}

Json ToJson(const TrialResult& t) {
  Json out;
  out["trial"] = t.trial;
  out["alphas"] = ToJson(t.alphas);
  out["outcome"] = TrialOutcomeName(t.outcome);
  out["oracle"] = ToJson(t.oracle);
  if (t.bad_list) {
    out["bad_list"] = ToJson(*t.bad_list);
    out["rank_deficient"] = t.rank_deficient;
    out["subset"] = t.subset ? Vertices(*t.subset) : Json(nullptr);
    if (t.certificate) out["certificate"] = ToJson(*t.certificate);
  }
  out["seconds"] = t.seconds;
  return out;
}

Json ToJson(const TrialReport& r, bool include_trials) {
  const ExperimentConfig& c = r.config;
  Json out;
  out["config"] = {{"field", FormatFieldSpec(c.field)},
                   {"n", c.n},
                   {"k", c.k},
                   {"L", c.L},
                   {"eps", c.eps},
                   {"R", c.rate()},
                   {"lambda", c.lambda()},
                   {"r", c.r()},
                   {"radius", c.radius()},
                   {"seed", c.seed},
                   {"trials", c.trials},
                   {"workers", c.workers}};
  out["mode"] = OracleModeName(r.mode);
  out["decodable"] = r.decodable;
  out["bad_list"] = r.bad;
  out["rank_deficient"] = r.rank_deficient;
  out["failure_rate"] = r.failure_rate;
  out["failure_interval"] = {{"confidence", 0.95},
                             {"low", r.failure_interval.low},
                             {"high", r.failure_interval.high}};
  out["budget"] = ToJson(r.budget);
  out["seconds"] = r.seconds;
  if (include_trials) {
    Json trials = Json::array();
    for (const TrialResult& t : r.trials) trials.push_back(ToJson(t));
    out["trials"] = trials;
  }
  return out;
}

Json ToJson(const BlowupResult& b) {
  return {{"y", ToJson(b.y)},
          {"list_size", b.list_size},
          {"mode", b.exhaustive ? "exhaustive" : "sampled"},
          {"words_examined", b.words_examined}};
}

Json ToJson(const GmMdsWitness& w) {
  return {{"alphas", ToJson(w.alphas)}, {"M", ToJson(w.m)}, {"MH", ToJson(w.mh)}};
}

}  // namespace rslist::io
