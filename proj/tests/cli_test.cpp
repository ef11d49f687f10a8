// Copyright 2026 The fwseq Authors
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

#include "fwseq/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

namespace fwseq::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override { setenv("FWSEQ_LOG_LEVEL", "quiet", 1); }
};

TEST_F(CliTest, FwText) {
  const auto r = invoke({"fw", "12121"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "fw=4\n");
}

TEST_F(CliTest, FwJsonSchema) {
  const auto r = invoke({"fw", "12121", "--format", "json", "--naive"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["fw"], 4);
  EXPECT_EQ(j["naive_nodes"], 15);
  EXPECT_LT(j["nodes_visited"].get<int>(), 15);
  EXPECT_EQ(j["naive_fw"], 4);
  ASSERT_EQ(j["levels"].size(), 4u);
  EXPECT_EQ(j["levels"][0]["blocks"], 1);
}

TEST_F(CliTest, JsonIsIdenticalAcrossThreadCounts) {
  const auto a = invoke({"fw", "1234561234526", "--format", "json", "--threads", "1"});
  const auto b = invoke({"fw", "1234561234526", "--format", "json", "--threads", "3"});
  EXPECT_EQ(a.out, b.out);
  const auto c = invoke({"enumerate", "--letters", "4", "--format", "json", "--threads", "1"});
  const auto d = invoke({"enumerate", "--letters", "4", "--format", "json", "--threads", "3"});
  EXPECT_EQ(c.out, d.out);
  const auto e = invoke({"fl", "1231321", "--format", "json", "--threads", "1"});
  const auto f = invoke({"fl", "1231321", "--format", "json", "--threads", "3"});
  EXPECT_EQ(e.out, f.out);
}

TEST_F(CliTest, Contains) {
  EXPECT_EQ(invoke({"contains", "1221", "121"}).out, "true\n");
  EXPECT_EQ(invoke({"contains", "1212", "12121"}).out, "false\n");
  EXPECT_EQ(invoke({"contains", "1 10 1 10 1", "12121"}).out, "true\n");
}

TEST_F(CliTest, Alt) { EXPECT_EQ(invoke({"alt", "1233121"}).out, "alt=5\n"); }

TEST_F(CliTest, Fl) {
  const auto r = invoke({"fl", "12121"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "fl=2\n");
}

TEST_F(CliTest, FlUnresolvedExitsThree) {
  const auto r = invoke({"fl", "123123", "--budget", "1"});
  EXPECT_EQ(r.code, kUnresolved);
  EXPECT_NE(r.out.find("unresolved"), std::string::npos);
}

TEST_F(CliTest, EnumerateText) {
  const auto r = invoke({"enumerate", "--letters", "3"});
  ASSERT_EQ(r.code, kOk);
  std::istringstream in(r.out);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  ASSERT_EQ(lines.size(), 11u);
  EXPECT_TRUE(std::is_sorted(lines.begin(), lines.end()));
  EXPECT_EQ(lines.front(), "1213213");
}

TEST_F(CliTest, EnumerateJson) {
  const auto j = nlohmann::json::parse(invoke({"enumerate", "--letters", "2", "--format", "json"}).out);
  EXPECT_EQ(j["count"], 1);
  EXPECT_EQ(j["sequences"][0]["sequence"], "12121");
  EXPECT_EQ(j["sequences"][0]["fw"], 4);
  EXPECT_EQ(j["sequences"][0]["alternation_length"], 5);
}

TEST_F(CliTest, Classify) {
  EXPECT_EQ(invoke({"classify", "12121"}).out, "F01 n=2\n");
  EXPECT_EQ(invoke({"classify", "121212"}).out, "none\n");
  const auto v = invoke({"classify", "123412341", "--verbose"});
  EXPECT_NE(v.out.find("F19 n=4 i=1 reversed"), std::string::npos);
  const auto j = nlohmann::json::parse(invoke({"classify", "1213231", "--format", "json"}).out);
  EXPECT_EQ(j["match"]["family"], "F17");
  EXPECT_EQ(j["match"]["reversed"], true);
}

TEST_F(CliTest, VerifyTheoremWithGolden) {
  const std::string golden = FWSEQ_DATA_DIR "/appendix_b.txt";
  const auto ok = invoke({"verify-theorem", "--max-letters", "3", "--golden", golden});
  EXPECT_EQ(ok.code, kOk);
  EXPECT_NE(ok.out.find("n=3 enumerated=11"), std::string::npos);
  EXPECT_NE(ok.out.find("golden=match"), std::string::npos);

  // n = 4 hits the unlisted reversal pair.
  const auto four = invoke({"verify-theorem", "--max-letters", "4", "--golden", golden});
  EXPECT_EQ(four.code, kVerifyFailed);
  EXPECT_NE(four.out.find("unmatched enumerated: 123421431"), std::string::npos);
}

TEST_F(CliTest, VerifyTheoremGoldenMismatch) {
  const std::string path = ::testing::TempDir() + "/bad_golden.txt";
  {
    std::ofstream f(path);
    f << "12121\n\n1231213\n";
  }
  const auto r = invoke({"verify-theorem", "--max-letters", "3", "--golden", path});
  EXPECT_EQ(r.code, kVerifyFailed);
  EXPECT_NE(r.out.find("golden=MISMATCH"), std::string::npos);
  EXPECT_NE(r.out.find("enumeration only: 1233121"), std::string::npos);
}

TEST_F(CliTest, Ex) {
  const auto r = invoke({"ex", "--pattern", "1212", "--n", "3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.rfind("ex=5 ", 0), 0u);
  const auto j = nlohmann::json::parse(invoke({"ex", "--pattern", "121", "--n", "4", "--format", "json"}).out);
  EXPECT_EQ(j["value"], 4);
  EXPECT_EQ(j["cap_hit"], false);
  const auto capped = invoke({"ex", "--pattern", "12121", "--n", "4", "--budget", "3"});
  EXPECT_EQ(capped.code, kUnresolved);
  EXPECT_EQ(capped.out.rfind("ex>=", 0), 0u);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"bogus"}).code, kUsage);
  EXPECT_EQ(invoke({"fw"}).code, kUsage);
  EXPECT_EQ(invoke({"fw", "12x"}).code, kUsage);
  EXPECT_EQ(invoke({"fw", "12121", "--format", "xml"}).code, kUsage);
  EXPECT_EQ(invoke({"fw", "12121", "--frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({"enumerate", "--letters", "1"}).code, kUsage);
  EXPECT_EQ(invoke({"fl", "123", "--max-r", "2"}).code, kUsage);
  const auto r = invoke({"bogus"});
  EXPECT_FALSE(r.err.empty());
  EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, HelpExitsZero) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("verify-theorem"), std::string::npos);
}

}  // namespace
}  // namespace fwseq::cli
