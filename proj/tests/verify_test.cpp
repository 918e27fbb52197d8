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

#include "collatz/verify.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <set>

#include "collatz/catalog.hpp"
#include "collatz/errors.hpp"
#include "collatz/report.hpp"
#include "oracle.hpp"

namespace collatz {
namespace {

std::vector<std::string> references(const ClaimSpec& c) {
  std::vector<std::string> out;
  for (const auto& s : c.steps) {
    if (s.kind == ProofStep::Kind::lemma) out.push_back(s.lemma);
  }
  if (!c.base.empty()) out.push_back(c.base);
  for (const auto& cs : c.cases) out.push_back(cs.claim);
  return out;
}

TEST(CatalogTest, IdsAreUniqueAndReferencesResolve) {
  std::set<std::string> ids;
  for (const auto& c : catalog()) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_FALSE(c.statement.empty()) << c.id;
  }
  for (const auto& c : catalog()) {
    for (const auto& r : references(c)) EXPECT_TRUE(ids.contains(r)) << c.id << " -> " << r;
  }
}

TEST(CatalogTest, ReferencesAreAcyclic) {
  std::map<std::string, int> state;  // 1 visiting, 2 done
  std::function<bool(const std::string&)> acyclic = [&](const std::string& id) {
    if (state[id] == 1) return false;
    if (state[id] == 2) return true;
    state[id] = 1;
    for (const auto& r : references(find_claim(id))) {
      if (!acyclic(r)) return false;
    }
    state[id] = 2;
    return true;
  };
  for (const auto& c : catalog()) EXPECT_TRUE(acyclic(c.id)) << c.id;
}

TEST(CatalogTest, UnknownIdListsKnownIds) {
  try {
    find_claim("bogus");
    FAIL();
  } catch (const UnknownClaim& e) {
    EXPECT_NE(std::string(e.what()).find("L4.10-11"), std::string::npos);
  }
}

TEST(CatalogTest, FixedScripts) {
  EXPECT_EQ(fixed_script(find_claim("L4.10-11"))->str(), "TDDFFBBT");
  EXPECT_EQ(fixed_script(find_claim("L4.11-10"))->str(), "FDDTTBBF");
  EXPECT_EQ(fixed_script(find_claim("L4.00-11"))->str(), "TDDFDDFFBBBBTT");
  EXPECT_EQ(fixed_script(find_claim("L4.21-12"))->str(), "FDFDDTTBBB");
  EXPECT_EQ(fixed_script(find_claim("T.5attach"))->str(), "TT");
  EXPECT_FALSE(fixed_script(find_claim("L4.even.21-11")).has_value());
  EXPECT_FALSE(fixed_script(find_claim("T.21-11")).has_value());
  for (const auto& c : catalog()) {
    if (c.kind == ClaimKind::inverse && c.stated) {
      EXPECT_EQ(*c.stated, fixed_script(find_claim(c.base))->inverse()) << c.id;
    }
  }
}

TEST(PreconditionTest, Holds) {
  const Precondition odd_r1{Parity::odd, 1u, Parity::any};
  EXPECT_TRUE(odd_r1.holds(7));    // 21
  EXPECT_FALSE(odd_r1.holds(4));   // 11, even
  EXPECT_FALSE(odd_r1.holds(9));   // 100
  const Precondition r_even{Parity::any, 1u, Parity::even};
  EXPECT_TRUE(r_even.holds(7));    // R = 2
  EXPECT_FALSE(r_even.holds(4));   // R = 1
  EXPECT_EQ(odd_r1.str(), "A odd, last digit 1");
  EXPECT_TRUE(Precondition{}.trivial());
}

TEST(VerifyTest, ScriptedLemmaPasses) {
  const auto r = verify_claim("L4.10-11", 1, 100);
  EXPECT_EQ(r.pass, 100u);
  EXPECT_EQ(r.fail, 0u);
  EXPECT_TRUE(r.failures.empty());
}

TEST(VerifyTest, CountsCoverTheRange) {
  for (const char* id : {"L4.R1.21-11", "L5.desc-0", "T.edge-loop", "L4.m1-desc"}) {
    const auto r = verify_claim(id, 1, 60);
    EXPECT_EQ(r.total(), 60u) << id;
    EXPECT_EQ(r.failures.empty(), r.fail == 0) << id;
  }
}

TEST(VerifyTest, WitnessesReplay) {
  VerifyOptions o;
  for (const char* id : {"L4.R0.21-11", "L4.R1.11-22", "T.21-11", "L4.11-22", "T.A-11", "T.descending",
                         "T.node-loop", "T.5cluster"}) {
    const auto& c = find_claim(id);
    for (int a = 1; a <= 40; ++a) {
      const auto r = verify_instance(c, a, o);
      if (r.verdict != Verdict::pass) continue;
      for (const auto& w : r.witnesses) ASSERT_FALSE(revalidate(w).has_value()) << id << " at " << a;
    }
  }
}

TEST(VerifyTest, ScriptedWitnessIsTheWord) {
  const auto r = verify_instance(find_claim("L4.10-11"), 2, {});
  ASSERT_EQ(r.verdict, Verdict::pass);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses[0].start, 21);
  EXPECT_EQ(r.witnesses[0].end(), 22);
  EXPECT_EQ(r.witnesses[0].actions().str(), "TDDFFBBT");
}

TEST(VerifyTest, InverseReplaysForwardWitness) {
  const auto r = verify_instance(find_claim("L4.11-21"), 5, {});
  ASSERT_EQ(r.verdict, Verdict::pass);
  const Trace& w = r.witnesses.back();
  EXPECT_EQ(w.start, static_cast<std::int64_t>(oracle::from_ternary("1211")));
  EXPECT_EQ(w.end(), static_cast<std::int64_t>(oracle::from_ternary("1221")));
}

TEST(VerifyTest, IndexedInstances) {
  const auto& c = find_claim("T.2app");
  for (int a = 1; a <= 30; ++a) {
    for (int n = 1; n <= 3; ++n) {
      const auto r = verify_instance(c, a, {}, n);
      ASSERT_EQ(r.verdict, Verdict::pass) << a << "," << n << ": " << (r.failure ? r.failure->reason : "");
      const Trace& w = r.witnesses.back();
      std::string s = oracle::ternary(static_cast<std::uint64_t>(a)) + std::string(static_cast<std::size_t>(n), '2');
      ASSERT_EQ(w.start, static_cast<std::int64_t>(oracle::from_ternary(s)));
      ASSERT_EQ(w.end(), static_cast<std::int64_t>(oracle::from_ternary(s + "2")));
    }
  }
}

ClaimSpec broken(const char* expected) {
  ClaimSpec c;
  c.id = "test.broken";
  c.statement = "deliberately wrong";
  c.kind = ClaimKind::scripted;
  c.model = Model::M1;
  c.input = ValueTemplate::parse("A10");
  c.expected = ValueTemplate::parse(expected);
  ProofStep s;
  s.actions = ActionSeq::parse("TDDFFBBT");
  c.steps.push_back(s);
  return c;
}

TEST(VerifyTest, WrongExpectationFailsWithTrace) {
  const auto r = verify_claim(broken("A12"), 1, 10);
  EXPECT_EQ(r.fail, 10u);
  ASSERT_EQ(r.failures.size(), 10u);
  const Failure& f = r.failures[0];
  EXPECT_EQ(f.input, "1");
  ASSERT_TRUE(f.trace.has_value());
  EXPECT_FALSE(revalidate(*f.trace).has_value());
  EXPECT_EQ(f.trace->end(), 13);
  EXPECT_NE(f.reason.find("expected A12"), std::string::npos);
}

TEST(VerifyTest, GuardViolationFailsAtStep) {
  ClaimSpec c = broken("A11");
  c.steps[0].actions = ActionSeq::parse("TDFF");  // 3A+1 doubled once is not 1 mod 3
  const auto r = verify_instance(c, 1, {});
  ASSERT_EQ(r.verdict, Verdict::fail);
  EXPECT_EQ(r.failure->step_index, 2u);
  EXPECT_NE(r.failure->reason.find("F"), std::string::npos);
}

TEST(VerifyTest, FailureCapKeepsCount) {
  VerifyOptions o;
  o.max_recorded_failures = 3;
  const auto r = verify_claim(broken("A12"), 1, 10, o);
  EXPECT_EQ(r.fail, 10u);
  EXPECT_EQ(r.failures.size(), 3u);
  EXPECT_TRUE(r.extra.value("failures_truncated", false));
}

TEST(VerifyTest, Succession) {
  const auto r = verify_succession(3, 1, 500);
  EXPECT_EQ(r.pass, 500u);
  EXPECT_EQ(verify_succession(-4, 1, 50).pass, 50u);
  EXPECT_THROW(verify_succession(5, 1, 2), DomainViolation);
  EXPECT_THROW(verify_succession(0, 1, 2), DomainViolation);
  // The -1 word passes through 0 when started at 1.
  const auto prec = verify_succession(-1, 1, 10);
  EXPECT_EQ(prec.pass, 10u);
  EXPECT_EQ(prec.extra["notes"]["nonpositive intermediate"], 1);
}

TEST(VerifyTest, RationalReach) {
  const auto r = verify_claim("L3.m2-reach", 1, 200);
  EXPECT_EQ(r.pass, 200u);
}

TEST(VerifyTest, Clusters) {
  EXPECT_EQ(verify_cluster(ClusterShape::five, 0, 30).pass, 31u);
  EXPECT_EQ(verify_cluster(ClusterShape::three, 0, 30).pass, 31u);
  EXPECT_EQ(verify_cluster(ClusterShape::nine, 1, 30).pass, 30u);
  VerifyOptions small;
  small.cluster_bound = 100;
  EXPECT_THROW(verify_cluster(ClusterShape::nine, 1, 30, small), DomainViolation);
}

TEST(VerifyTest, Attaching) {
  const auto r = verify_attaching(1, 300);
  EXPECT_EQ(r.pass, 300u);
}

TEST(VerifyTest, Descending) {
  const auto r = verify_descending(Model::MS, 1, 2000);
  EXPECT_EQ(r.pass, 1999u);
  EXPECT_EQ(r.skipped, 1u);
  const auto twos = verify_descending(Model::MS, 1, 90, {}, Precondition{Parity::any, 2u, Parity::any});
  EXPECT_EQ(twos.pass, 30u);
}

TEST(VerifyTest, EdgeLoopFindings) {
  // From 2 the only MS walk is 2 -> 1 -> 4 -> 2, which never meets 7.
  const auto r = verify_edge_loop(1, 20);
  EXPECT_EQ(r.skipped, 10u);
  EXPECT_GT(r.fail, 0u);
  EXPECT_EQ(r.failures[0].input, "2");
}

TEST(VerifyTest, WholeGraphClaims) {
  const auto census = verify_claim("T.unique-cycle", 1, 5000);
  EXPECT_EQ(census.pass, 5000u);
  EXPECT_EQ(census.extra["cycles"], nlohmann::json::parse("[[1,4,2]]"));
  const auto deloop = verify_claim("T.deloop", 1, 200);
  EXPECT_EQ(deloop.pass, 200u);
  EXPECT_TRUE(deloop.extra["final_equals_m0"].get<bool>());
}

TEST(VerifyTest, RangeValidation) {
  EXPECT_THROW(verify_claim("L4.10-11", 5, 4), DomainViolation);
  EXPECT_THROW(verify_claim("L4.10-11", 0, 4), DomainViolation);
  EXPECT_THROW(verify_claim("nope", 1, 4), UnknownClaim);
}

TEST(VerifyTest, WorkerCountDoesNotChangeReports) {
  VerifyOptions one;
  one.workers = 1;
  VerifyOptions four;
  four.workers = 4;
  for (const char* id : {"T.21-11", "T.edge-loop", "T.5cluster", "L4.R1.2bs"}) {
    EXPECT_EQ(report_to_json(verify_claim(id, 1, 80, one)).dump(), report_to_json(verify_claim(id, 1, 80, four)).dump())
        << id;
  }
}

}  // namespace
}  // namespace collatz
