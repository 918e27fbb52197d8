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

#include "collatz/report.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "collatz/parallel.hpp"

namespace collatz {
namespace {

TEST(ReportTest, TraceJson) {
  const auto j = trace_to_json(apply_seq(ActionSeq::parse("TB"), BigInt(5), Model::M0));
  EXPECT_EQ(j["model"], "M0");
  EXPECT_EQ(j["start"], "5");
  EXPECT_EQ(j["start_ternary"], "12");
  ASSERT_EQ(j["steps"].size(), 2u);
  EXPECT_EQ(j["steps"][0]["action"], "T");
  EXPECT_EQ(j["steps"][0]["value"], "16");
  EXPECT_EQ(j["steps"][0]["ternary"], "121");
}

TEST(ReportTest, TraceJsonLines) {
  std::ostringstream out;
  write_trace_jsonl(out, apply_seq(ActionSeq::parse("F"), BigInt(7), Model::MS));
  EXPECT_EQ(out.str(),
            "{\"action\":null,\"step\":0,\"ternary\":\"21\",\"value\":\"7\"}\n"
            "{\"action\":\"F\",\"step\":1,\"ternary\":\"2\",\"value\":\"2\"}\n");
}

TEST(ReportTest, Schema) {
  const auto j = report_to_json(verify_claim("L4.02-11", 1, 5));
  for (const char* key : {"claim_id", "model", "range", "pass", "fail", "skipped", "failures", "bounds", "wall_ms"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["range"], nlohmann::json::parse(R"(["1","5"])"));
  EXPECT_TRUE(j["wall_ms"].is_null());
  VerifyOptions timed;
  timed.timing = true;
  EXPECT_TRUE(report_to_json(verify_claim("L4.02-11", 1, 5, timed))["wall_ms"].is_number());
}

TEST(ReportTest, FailureEntries) {
  const auto j = report_to_json(verify_edge_loop(1, 4));
  ASSERT_EQ(j["failures"].size(), 2u);
  EXPECT_EQ(j["failures"][0]["input"], "2");
  EXPECT_TRUE(j["failures"][0].contains("step_index"));
  EXPECT_TRUE(j["failures"][0].contains("trace"));
}

TEST(ReportTest, CsvAndText) {
  const std::vector<VerifyReport> reports{verify_claim("L4.02-11", 1, 5), verify_edge_loop(1, 4)};
  std::ostringstream csv;
  write_reports_csv(csv, reports);
  EXPECT_EQ(csv.str(), "claim_id,model,lo,hi,pass,fail,skipped,wall_ms\nL4.02-11,M1,1,5,5,0,0,\nT.edge-loop,MS,1,4,0,2,2,\n");
  std::ostringstream text;
  write_reports_text(text, reports);
  EXPECT_NE(text.str().find("PASS L4.02-11 M1 [1..5] pass=5 fail=0 skipped=0\n"), std::string::npos);
  EXPECT_NE(text.str().find("FAIL T.edge-loop"), std::string::npos);
}

TEST(ParallelTest, KeepsIndexOrder) {
  const auto v = parallel_map(1000, 8, [](std::size_t i) { return i * i; });
  for (std::size_t i = 0; i < v.size(); ++i) ASSERT_EQ(v[i], i * i);
  EXPECT_TRUE(parallel_map(0, 4, [](std::size_t i) { return i; }).empty());
}

TEST(ParallelTest, RethrowsWorkerErrors) {
  EXPECT_THROW(parallel_map(100, 4,
                            [](std::size_t i) -> int {
                              if (i == 37) throw std::runtime_error("boom");
                              return 0;
                            }),
               std::runtime_error);
}

TEST(ParallelTest, WorkerEnvironment) {
  ::setenv("COLLATZ_WORKERS", "3", 1);
  EXPECT_EQ(default_workers(), 3u);
  ::setenv("COLLATZ_WORKERS", "zero", 1);
  EXPECT_GE(default_workers(), 1u);
  ::unsetenv("COLLATZ_WORKERS");
}

}  // namespace
}  // namespace collatz
