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

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.h"
#include "rslist/errors.h"
#include "rslist/json_io.h"

namespace rslist {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "rslist");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = RunCli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

const char* kTriangle = R"({"t":3,"edges":[[1,2],[2,3],[1,3],[1,2,3]]})";

TEST(Cli, HelpAndUsageErrors) {
  EXPECT_EQ(Cli({"--help"}).code, 0);
  EXPECT_EQ(Cli({}).code, 2);
  EXPECT_EQ(Cli({"frobnicate"}).code, 2);
  EXPECT_EQ(Cli({"wpc-check"}, kTriangle).code, 2);  // --k missing
  EXPECT_EQ(Cli({"rim-rank", "--k", "2", "--field", "12"}, kTriangle).code, 2);
  EXPECT_EQ(Cli({"rim-rank", "--k", "2", "--field", "13", "--assign", "1,x"}, kTriangle).code, 2);
  EXPECT_EQ(Cli({"bad-list", "--k", "2", "--field", "7", "--n", "4", "--mode", "fast"}).code, 2);
}

TEST(Cli, DomainErrorsExitOne) {
  EXPECT_EQ(Cli({"wpc-check", "--k", "1"}, "{not json").code, 1);
  EXPECT_EQ(Cli({"wpc-check", "--k", "1"}, R"({"t":2,"edges":[[1,3]]})").code, 1);
  EXPECT_EQ(Cli({"gzp", "--k", "3"}, kTriangle).code, 1);
  EXPECT_EQ(Cli({"certify", "--k", "1", "--r", "1", "--field", "3"}, kTriangle).code, 1);
  EXPECT_EQ(Cli({"mc-puncture", "--field", "7", "--n", "8", "--k", "2"}).code, 1);
}

TEST(Cli, WpcOrientGzp) {
  CliRun r = Cli({"wpc-check", "--k", "2"}, kTriangle);
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["connected"], true);
  r = Cli({"wpc-check", "--k", "3"}, kTriangle);
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["connected"], false);
  EXPECT_TRUE(j.contains("witness"));
  r = Cli({"orient", "--k", "2"}, kTriangle);
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["found"], true);
  EXPECT_EQ(j["verified"], true);
  r = Cli({"gzp", "--k", "2"}, kTriangle);
  ASSERT_EQ(r.code, 0) << r.err;
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["valid"], true);
  EXPECT_EQ(j["pattern"]["rows"], 2);
}

TEST(Cli, RimRankShape) {
  const CliRun r = Cli({"rim-rank", "--k", "2", "--field", "13"}, kTriangle);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["rank"], 4);
  EXPECT_EQ(j["columns"], 4);
  EXPECT_EQ(j["full_column_rank"], true);
  // X_1 = X_2 = X_3 = X_4 = 0 collapses the Vandermonde blocks.
  const CliRun z = Cli({"rim-rank", "--k", "2", "--field", "13", "--assign", "0,0,0,0"}, kTriangle);
  EXPECT_EQ(nlohmann::json::parse(z.out)["full_column_rank"], false);
}

TEST(Cli, CertifyStreamsTrials) {
  const CliRun r = Cli({"certify", "--k", "1", "--r", "1", "--field", "7", "--trials", "3",
                     "--output", "-"},
                    kTriangle);
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_TRUE(j.contains("certificate"));
    EXPECT_TRUE(j.contains("descents"));
    EXPECT_TRUE(j.contains("refreshes"));
    EXPECT_TRUE(j.contains("probe_count"));
    ++count;
  }
  EXPECT_EQ(count, 3);
}

TEST(Cli, CertifyWithFixedAlphasIsDeterministic) {
  const std::vector<std::string> args{"certify", "--k", "1", "--r", "1", "--field", "7",
                                      "--alphas", "1,2,3,4"};
  const CliRun a = Cli(args, kTriangle), b = Cli(args, kTriangle);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(Cli({"certify", "--k", "1", "--r", "1", "--field", "7", "--alphas", "1,2"}, kTriangle)
                .code,
            2);
}

TEST(Cli, BadListValidateAndAlphasOverride) {
  CliRun r =
      Cli({"bad-list", "--field", "7", "--k", "3", "--L", "2", "--alphas", "0,1,2,3,4,5"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["alphas"], nlohmann::json::parse("[0,1,2,3,4,5]"));
  EXPECT_EQ(j["oracle"]["mode"], "exhaustive");
  EXPECT_GT(j["bad_lists"].size(), 0u);
  r = Cli({"validate", "--field", "7", "--k", "3", "--alphas", "0,1,2,3,4,5"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = nlohmann::json::parse(r.out);
  const auto& rep = j["report"];
  EXPECT_EQ(rep["bad_lists"].get<int>(), rep["filtered"].get<int>() + rep["extracted"].get<int>());
}

TEST(Cli, MonteCarloStreamAndFile) {
  CliRun r = Cli({"mc-puncture", "--field", "13", "--n", "8", "--k", "2", "--trials", "4",
               "--output", "-"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::vector<nlohmann::json> docs;
  while (std::getline(lines, line)) docs.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(docs.size(), 5u);
  EXPECT_EQ(docs.back()["summary"], true);
  EXPECT_EQ(docs.back()["decodable"].get<int>() + docs.back()["bad_list"].get<int>(), 4);

  const std::string path = ::testing::TempDir() + "mc.json";
  r = Cli({"mc-puncture", "--field", "13", "--n", "8", "--k", "2", "--trials", "2", "--output",
           path});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream file(path);
  const auto j = nlohmann::json::parse(file);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["trials"].size(), 2u);
  std::remove(path.c_str());
}

TEST(Cli, BlowupAndGmMds) {
  CliRun r = Cli({"blowup", "--field", "5", "--k", "2", "--agreement", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["mode"], "exhaustive");
  EXPECT_TRUE(j.contains("method"));
  r = Cli({"gmmds", "--field", "13", "--k", "2"}, kTriangle);
  ASSERT_EQ(r.code, 0) << r.err;
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["found"], true);
  EXPECT_EQ(j["verified"], true);
  EXPECT_EQ(Cli({"gmmds", "--field", "13"}, kTriangle).code, 2);
  r = Cli({"gmmds", "--field", "13"}, R"({"n":4,"k":2,"sets":[[1],[2]]})");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["found"], true);
}

TEST(JsonIo, HypergraphRoundTrip) {
  const Hypergraph h(3, {0b011, 0, 0b111});
  EXPECT_EQ(io::ParseHypergraph(io::ToJson(h)), h);
  EXPECT_THROW(io::ParseHypergraph(nlohmann::json::parse(R"({"t":2})")), Error);
  EXPECT_THROW(io::ParseHypergraph(nlohmann::json::parse(R"({"t":2,"edges":[[0]]})")), Error);
}

}  // namespace
}  // namespace rslist
