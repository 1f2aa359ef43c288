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

#include "cli.h"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rslist/certify.h"
#include "rslist/codes.h"
#include "rslist/harness.h"
#include "rslist/hypergraph.h"
#include "rslist/json_io.h"
#include "rslist/rim.h"

namespace rslist {

namespace {

using io::Json;

// Raised for malformed argument values that CLI11 itself cannot see.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string field = "11";
  std::string input;
  std::string output;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
};

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

Field ParseField(const std::string& text) {
  try {
    return Field::Parse(text);
  } catch (const Error& e) {
    throw UsageError(std::string("--field: ") + e.what());
  }
}

std::vector<FieldElement> ParseList(const std::string& flag, const std::string& text,
                                    const Field& field) {
  try {
    return io::ParseElementList(text, field);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

OracleMode ParseMode(const std::string& text) {
  if (text == "exhaustive") return OracleMode::kExhaustive;
  if (text == "sampled") return OracleMode::kSampled;
  throw UsageError("--mode must be exhaustive or sampled");
}

Json ReadInput(const Common& c, Context& ctx) {
  if (c.input.empty() || c.input == "-") return io::ReadJson(ctx.in);
  std::ifstream file(c.input);
  if (!file) throw Error(ErrorCode::kParseError, "cannot open " + c.input);
  return io::ReadJson(file);
}

void WriteDocument(const Common& c, Context& ctx, Json body) {
  const Json doc = io::Document(std::move(body));
  if (c.output.empty() || c.output == "-") {
    ctx.out << doc.dump() << '\n';
    return;
  }
  std::ofstream file(c.output);
  if (!file) throw Error(ErrorCode::kParseError, "cannot write " + c.output);
  file << doc.dump(2) << '\n';
}

bool Streaming(const Common& c) { return c.output == "-"; }

void AddCommon(CLI::App* cmd, Common& c, bool field = true) {
  if (field) cmd->add_option("--field", c.field, "field spec: p or p^m/c_m..c_0")->capture_default_str();
  cmd->add_option("--input", c.input, "input JSON file (default stdin)");
  cmd->add_option("--output", c.output, "output file; '-' streams per-trial JSON lines");
  cmd->add_option("--seed", c.seed, "random seed")->capture_default_str();
  cmd->add_option("--workers", c.workers, "worker threads")->capture_default_str();
}

RsCode MakeCode(const Field& field, std::size_t n, std::size_t k, const std::string& alphas,
                std::uint64_t seed) {
  if (!alphas.empty()) {
    std::vector<FieldElement> points = ParseList("--alphas", alphas, field);
    if (n != 0 && points.size() != n) throw UsageError("--alphas must list exactly n points");
    return RsCode(field, k, std::move(points));
  }
  if (n == 0) throw UsageError("--n is required without --alphas");
  return RsCode::RandomlyPunctured(field, n, k, seed);
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
           std::ostream& err) {
  Context ctx{in, out, err};
  CLI::App app{"Experiments on list decoding of randomly punctured Reed-Solomon codes"};
  app.name("rslist");
  app.require_subcommand(1);

  Common common;
  std::size_t k = 1, r = 1, n = 0, L = 2, trials = 1, agreement = 0, samples = 10000;
  double eps = 0.5;
  std::string assign, alphas, mode;
  bool all_subsets = false;

  auto* wpc = app.add_subcommand("wpc-check", "weak partition connectivity of a hypergraph");
  AddCommon(wpc, common, false);
  wpc->add_option("--k", k)->required();

  auto* orient = app.add_subcommand("orient", "orientation with k edge-disjoint paths to a root");
  AddCommon(orient, common, false);
  orient->add_option("--k", k)->required();

  auto* gzp = app.add_subcommand("gzp", "generic zero pattern from an orientation");
  AddCommon(gzp, common, false);
  gzp->add_option("--k", k)->required();

  auto* rim = app.add_subcommand("rim-rank", "rank of the reduced intersection matrix");
  AddCommon(rim, common);
  rim->add_option("--k", k)->required();
  rim->add_option("--assign", assign, "values for X_1, X_2, ... (comma-separated)");

  auto* certify = app.add_subcommand("certify", "run the certificate construction");
  AddCommon(certify, common);
  certify->add_option("--k", k)->required();
  certify->add_option("--r", r)->required();
  certify->add_option("--trials", trials)->capture_default_str();
  certify->add_option("--alphas", alphas, "fixed evaluation points (comma-separated)");

  auto* bad = app.add_subcommand("bad-list", "enumerate lists within the average radius");
  AddCommon(bad, common);
  bad->add_option("--n", n);
  bad->add_option("--k", k)->required();
  bad->add_option("--L", L)->capture_default_str();
  bad->add_option("--alphas", alphas);
  bad->add_option("--mode", mode, "exhaustive or sampled");
  bad->add_option("--samples", samples)->capture_default_str();
  bad->add_flag("--all-subsets", all_subsets, "do not restrict to lists containing zero");

  auto* validate = app.add_subcommand("validate", "check every bad list end to end");
  AddCommon(validate, common);
  validate->add_option("--n", n);
  validate->add_option("--k", k)->required();
  validate->add_option("--L", L)->capture_default_str();
  validate->add_option("--alphas", alphas);
  validate->add_option("--mode", mode);
  validate->add_option("--samples", samples)->capture_default_str();

  auto* mc = app.add_subcommand("mc-puncture", "Monte Carlo over random evaluation points");
  AddCommon(mc, common);
  mc->add_option("--n", n)->required();
  mc->add_option("--k", k)->required();
  mc->add_option("--L", L)->capture_default_str();
  mc->add_option("--eps", eps)->capture_default_str();
  mc->add_option("--trials", trials)->capture_default_str();
  mc->add_option("--mode", mode);
  mc->add_option("--samples", samples)->capture_default_str();

  auto* blowup = app.add_subcommand("blowup", "largest list of a full-length code");
  AddCommon(blowup, common);
  blowup->add_option("--k", k)->required();
  blowup->add_option("--agreement", agreement)->required();
  blowup->add_option("--mode", mode);

  auto* gmmds = app.add_subcommand("gmmds", "search for a zero-pattern witness");
  AddCommon(gmmds, common);
  gmmds->add_option("--k", k, "required when the input is a hypergraph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (wpc->parsed()) {
      const Hypergraph h = io::ParseHypergraph(ReadInput(common, ctx));
      const WpcResult res = CheckWeakPartitionConnectivity(h, k);
      Json body = {{"command", "wpc-check"}, {"k", k}, {"connected", res.connected}};
      if (res.witness) {
        body["witness"] = io::ToJson(*res.witness);
        body["crossing_weight"] = CrossingWeight(h, *res.witness);
      }
      WriteDocument(common, ctx, body);
    } else if (orient->parsed()) {
      const Hypergraph h = io::ParseHypergraph(ReadInput(common, ctx));
      const auto o = FindOrientation(h, k);
      Json body = {{"command", "orient"}, {"k", k}, {"found", o.has_value()}};
      if (o) {
        body["orientation"] = io::ToJson(*o);
        body["verified"] = VerifyOrientation(h, *o, k);
      }
      WriteDocument(common, ctx, body);
    } else if (gzp->parsed()) {
      const Hypergraph h = io::ParseHypergraph(ReadInput(common, ctx));
      const auto o = FindOrientation(h, k);
      if (!o) throw Error(ErrorCode::kInvalidOrientation, "hypergraph admits no orientation");
      const ZeroPattern zp = GzpFromOrientation(h, *o, k);
      WriteDocument(common, ctx,
                    {{"command", "gzp"},
                     {"k", k},
                     {"orientation", io::ToJson(*o)},
                     {"pattern", io::ToJson(zp)},
                     {"valid", VerifyGzp(zp)}});
    } else if (rim->parsed()) {
      const Field field = ParseField(common.field);
      const Hypergraph h = io::ParseHypergraph(ReadInput(common, ctx));
      const PartialAssignment a{ParseList("--assign", assign, field)};
      if (a.prefix() > h.n()) throw UsageError("--assign lists more values than edges");
      const SymbolicRim m = BuildRim(h, k);
      std::size_t rank;
      if (a.prefix() == h.n()) {
        rank = RankConcrete(field, Evaluate(field, m, a).ToMatrix());
      } else {
        rank = SymbolicRank(field, m.t, m.k, m.n, m.rows, a, common.seed);
      }
      WriteDocument(common, ctx,
                    {{"rank", rank},
                     {"full_column_rank", rank == m.columns()},
                     {"columns", m.columns()}});
    } else if (certify->parsed()) {
      const Field field = ParseField(common.field);
      const Hypergraph h = io::ParseHypergraph(ReadInput(common, ctx));
      if (field.order() <= h.n()) {
        throw Error(ErrorCode::kInvalidParameters, "certify needs q > n");
      }
      std::vector<FieldElement> fixed;
      if (!alphas.empty()) {
        fixed = ParseList("--alphas", alphas, field);
        if (fixed.size() != h.n()) throw UsageError("--alphas must list one point per edge");
      }
      const TypeOrdered sorted = TypeOrder(h);
      const MatrixSequenceBuilder builder(field, sorted.h, k, r);
      Json results = Json::array();
      for (std::size_t trial = 0; trial < trials; ++trial) {
        std::vector<FieldElement> points = fixed;
        Rng rng = Rng(common.seed).Split(trial);
        if (points.empty()) points = SampleDistinctPoints(field, h.n(), rng);
        // Points follow their edges into type order.
        std::vector<FieldElement> permuted(h.n());
        for (std::size_t i = 0; i < h.n(); ++i) permuted[sorted.permutation[i]] = points[i];
        Json line = io::ToJson(GetCertificate(builder, permuted, rng()));
        line["trial"] = trial;
        if (Streaming(common)) {
          ctx.out << io::Document(line).dump() << '\n';
        } else {
          results.push_back(line);
        }
      }
      if (!Streaming(common)) {
        Json perm = Json::array();
        for (std::size_t p : sorted.permutation) perm.push_back(p + 1);
        WriteDocument(common, ctx,
                      {{"command", "certify"},
                       {"k", k},
                       {"r", r},
                       {"type_order", perm},
                       {"trials", results}});
      }
    } else if (bad->parsed() || validate->parsed()) {
      const Field field = ParseField(common.field);
      const RsCode code = MakeCode(field, n, k, alphas, common.seed);
      OracleOptions opt;
      opt.seed = common.seed;
      opt.workers = common.workers;
      opt.samples = samples;
      const auto messages = code.num_messages();
      opt.mode = mode.empty() ? (messages <= kMaxExhaustiveMessages ? OracleMode::kExhaustive
                                                                    : OracleMode::kSampled)
                              : ParseMode(mode);
      Json body = {{"field", FormatFieldSpec(field.spec())},
                   {"n", code.n()},
                   {"k", code.k()},
                   {"L", L},
                   {"alphas", io::ToJson(code.alphas())}};
      if (bad->parsed()) {
        opt.translation_reduced = !all_subsets;
        Json lists = Json::array();
        const OracleStats stats = BadListOracle(code, L, opt, [&](const BadList& b) {
          if (Streaming(common)) {
            ctx.out << io::Document(io::ToJson(b)).dump() << '\n';
          } else {
            lists.push_back(io::ToJson(b));
          }
        });
        body["command"] = "bad-list";
        body["translation_reduced"] = opt.translation_reduced;
        body["oracle"] = io::ToJson(stats);
        if (!Streaming(common)) {
          body["bad_lists"] = lists;
          WriteDocument(common, ctx, body);
        }
      } else {
        body["command"] = "validate";
        body["report"] = io::ToJson(ValidatePipeline(code, L, opt));
        WriteDocument(common, ctx, body);
      }
    } else if (mc->parsed()) {
      ExperimentConfig cfg;
      cfg.field = ParseField(common.field).spec();
      cfg.n = n;
      cfg.k = k;
      cfg.L = L;
      cfg.eps = eps;
      cfg.seed = common.seed;
      cfg.trials = trials;
      cfg.workers = common.workers;
      MonteCarloOptions opt;
      opt.samples = samples;
      if (!mode.empty()) opt.mode = ParseMode(mode);
      if (Streaming(common)) {
        opt.on_trial = [&](const TrialResult& t) {
          ctx.out << io::Document(io::ToJson(t)).dump() << '\n';
        };
      }
      const TrialReport report = MonteCarloPuncture(cfg, opt);
      Json body = io::ToJson(report, !Streaming(common));
      body["command"] = "mc-puncture";
      if (Streaming(common)) {
        body["summary"] = true;
        ctx.out << io::Document(body).dump() << '\n';
      } else {
        WriteDocument(common, ctx, body);
      }
    } else if (blowup->parsed()) {
      const Field field = ParseField(common.field);
      BlowupOptions opt;
      opt.seed = common.seed;
      if (!mode.empty()) opt.mode = ParseMode(mode);
      const BlowupResult res = FullLengthBlowupSearch(field, k, agreement, opt);
      Json body = io::ToJson(res);
      body["command"] = "blowup";
      body["method"] =
          "direct search over received words of the full-length code (no algebraic construction)";
      body["field"] = FormatFieldSpec(field.spec());
      body["k"] = k;
      body["agreement"] = agreement;
      WriteDocument(common, ctx, body);
    } else if (gmmds->parsed()) {
      const Field field = ParseField(common.field);
      const Json input = ReadInput(common, ctx);
      ZeroPattern zp;
      if (input.contains("edges")) {
        if (gmmds->count("--k") == 0) throw UsageError("--k is required for hypergraph input");
        const Hypergraph h = io::ParseHypergraph(input);
        const auto o = FindOrientation(h, k);
        if (!o) throw Error(ErrorCode::kInvalidOrientation, "hypergraph admits no orientation");
        zp = GzpFromOrientation(h, *o, k);
      } else {
        zp = io::ParseZeroPattern(input);
      }
      GmMdsOptions opt;
      opt.seed = common.seed;
      const auto w = GmMdsWitnessSearch(zp, field, opt);
      Json body = {{"command", "gmmds"},
                   {"field", FormatFieldSpec(field.spec())},
                   {"pattern", io::ToJson(zp)},
                   {"found", w.has_value()}};
      if (w) {
        body["witness"] = io::ToJson(*w);
        body["verified"] = CheckGmMdsWitness(field, zp, *w);
      }
      WriteDocument(common, ctx, body);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace rslist
