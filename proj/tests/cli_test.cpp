// Copyright 2026 The Collatz Models Authors
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

#include "cli.hpp"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

namespace collatz::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "collatz");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, Traj) {
  EXPECT_EQ(call({"traj", "6"}).out, "6 3 10 5 16 8 4 2 1 | steps=8 peak=16\n");
  EXPECT_EQ(call({"traj", "1"}).out, "1 | steps=0 peak=1\n");
  EXPECT_EQ(call({"traj", "5", "-v"}).out, "5[12] 16[121] 8[22] 4[11] 2[2] 1[1] | steps=5 peak=16[121]\n");
  EXPECT_EQ(call({"traj", "0"}).code, kExitUsage);
  EXPECT_EQ(call({"traj", "x"}).code, kExitUsage);
  EXPECT_EQ(call({"traj", "27", "--max-steps", "10"}).code, kExitFinding);
  const auto csv = call({"traj", "2", "--format", "csv"});
  EXPECT_EQ(csv.out, "step,action,value,ternary\n0,,2,2\n1,B,1,1\n");
}

TEST(CliTest, VerifyClaim) {
  const auto r = call({"verify", "--claim", "L4.10-11", "--range", "1..100"});
  ASSERT_EQ(r.code, kExitClean) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["reports"][0]["pass"], 100);
  EXPECT_EQ(j["fail"], 0);
}

TEST(CliTest, VerifyFindingExitsOne) {
  const auto r = call({"verify", "--claim", "T.edge-loop,L4.02-11", "--range", "1..10", "--format", "csv"});
  EXPECT_EQ(r.code, kExitFinding);
  EXPECT_NE(r.out.find("T.edge-loop,MS,1,10,"), std::string::npos);
  EXPECT_NE(r.out.find("L4.02-11,M1,1,10,10,0,0,"), std::string::npos);
}

TEST(CliTest, VerifyUsageErrors) {
  const auto bogus = call({"verify", "--claim", "bogus"});
  EXPECT_EQ(bogus.code, kExitUsage);
  EXPECT_NE(bogus.err.find("T.succ1"), std::string::npos);
  EXPECT_EQ(call({"verify", "--claim", "T.succ1", "--range", "5..1"}).code, kExitUsage);
  EXPECT_EQ(call({"verify", "--claim", "T.succ1", "--range", "a..b"}).code, kExitUsage);
  EXPECT_EQ(call({"verify", "--claim", "T.succ1", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(call({"verify"}).code, kExitUsage);
  EXPECT_EQ(call({}).code, kExitUsage);
}

TEST(CliTest, Help) {
  const auto r = call({"--help"});
  EXPECT_EQ(r.code, kExitClean);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(CliTest, Reach) {
  const auto r = call({"reach", "--model", "ms", "--from", "7", "--to", "1"});
  EXPECT_EQ(r.code, kExitClean);
  EXPECT_EQ(r.out, "7 -F-> 2 -B-> 1\nlength=2 word=FB\n");
  EXPECT_EQ(call({"reach", "--model", "ms", "--from", "2", "--to", "7"}).code, kExitFinding);
  EXPECT_EQ(call({"reach", "--model", "m2", "--from", "2", "--to", "7"}).code, kExitUsage);
  const auto jl = call({"reach", "--model", "m0", "--from", "2", "--to", "1", "--format", "jsonl"});
  EXPECT_EQ(jl.out.substr(0, 14), "{\"action\":null");
}

TEST(CliTest, Cluster) {
  const auto r = call({"cluster", "--kind", "nine", "--k", "1..20"});
  EXPECT_EQ(r.code, kExitClean);
  EXPECT_EQ(r.out, "PASS T.9cluster M1 [1..20] pass=20 fail=0 skipped=0\n");
  EXPECT_EQ(call({"cluster", "--kind", "seven"}).code, kExitUsage);
}

TEST(CliTest, Cycles) {
  const auto r = call({"cycles", "--model", "m0", "--max", "10000"});
  EXPECT_EQ(r.code, kExitClean);
  EXPECT_EQ(r.out, "1 4 2\n");
  const auto ms = call({"cycles", "--model", "ms", "--max", "10"});
  EXPECT_EQ(ms.code, kExitClean);
  EXPECT_NE(ms.out.find("1 4\n"), std::string::npos);
}

TEST(CliTest, Dot) {
  const auto r = call({"dot", "--model", "ms", "--max", "22"});
  EXPECT_EQ(r.code, kExitClean);
  EXPECT_NE(r.out.find("7 -> 2 [label=\"F\", color=\"red\"]"), std::string::npos);
  EXPECT_EQ(call({"dot", "--model", "ms", "--max", "0"}).code, kExitUsage);
}

TEST(CliTest, Stats) {
  const auto r = call({"stats", "--range", "26..27"});
  EXPECT_EQ(r.code, kExitClean);
  EXPECT_EQ(r.out, "n,steps,peak\n26,10,40\n27,111,9232\n");
}

TEST(CliTest, Deloop) {
  const auto r = call({"deloop", "--max", "200"});
  EXPECT_EQ(r.code, kExitClean);
  EXPECT_NE(r.out.find("phase 3 edges equal M0: yes"), std::string::npos);
  const auto tight = call({"deloop", "--max", "27", "--headroom", "0", "--format", "json"});
  EXPECT_EQ(tight.code, kExitFinding);
  EXPECT_TRUE(nlohmann::json::parse(tight.out)["final_equals_m0"].get<bool>());
}

TEST(CliTest, ClaimsListing) {
  const auto r = call({"claims"});
  EXPECT_EQ(r.code, kExitClean);
  EXPECT_NE(r.out.find("L4.R1.21-11  [M1]"), std::string::npos);
}

}  // namespace
}  // namespace collatz::cli
