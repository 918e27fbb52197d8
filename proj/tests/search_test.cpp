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

#include "collatz/search.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "collatz/errors.hpp"
#include "oracle.hpp"

namespace collatz {
namespace {

SearchBounds capped(std::int64_t cap, std::size_t depth = 64) {
  SearchBounds b;
  b.max_value = cap;
  b.max_depth = depth;
  return b;
}

TEST(ReachTest, ShortestLengthMatchesOracle) {
  oracle::Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto from = static_cast<std::int64_t>(1 + rng.below(300));
    const auto to = static_cast<std::int64_t>(1 + rng.below(300));
    for (auto [m, om] : {std::pair{Model::M1, oracle::M::M1}, std::pair{Model::MS, oracle::M::MS}}) {
      const int want = oracle::distance(from, to, om, 5000);
      const auto r = bfs_reach(m, BigInt(from), BigInt(to), capped(5000));
      if (want < 0) {
        ASSERT_FALSE(r.found()) << from << " -> " << to;
        continue;
      }
      ASSERT_TRUE(r.found()) << from << " -> " << to;
      ASSERT_EQ(r.path->length(), static_cast<std::size_t>(want)) << from << " -> " << to;
      ASSERT_FALSE(revalidate(r.path->to_trace()).has_value());
      ASSERT_EQ(r.path->start(), from);
      ASSERT_EQ(r.path->end(), to);
    }
  }
}

TEST(ReachTest, TrivialAndDeterministic) {
  const auto self = bfs_reach(Model::M1, BigInt(9), BigInt(9), capped(100));
  ASSERT_TRUE(self.found());
  EXPECT_EQ(self.path->length(), 0u);
  const auto a = bfs_reach(Model::M1, BigInt(21), BigInt(22), capped(1 << 20));
  const auto b = bfs_reach(Model::M1, BigInt(21), BigInt(22), capped(1 << 20));
  ASSERT_TRUE(a.found());
  EXPECT_EQ(a.path->str(), b.path->str());
}

TEST(ReachTest, PathRendering) {
  const auto r = bfs_reach(Model::MS, BigInt(7), BigInt(1), capped(100));
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.path->str(), "7 -F-> 2 -B-> 1");
}

TEST(ReachTest, UnreachableAndExhausted) {
  const auto r = bfs_reach(Model::MS, BigInt(2), BigInt(7), capped(1 << 20));
  EXPECT_EQ(r.status, SearchStatus::unreachable);
  EXPECT_FALSE(r.path.has_value());
  const auto d = bfs_reach(Model::M1, BigInt(1), BigInt(1000), capped(1 << 20, 3));
  EXPECT_EQ(d.status, SearchStatus::exhausted);
  SearchBounds tiny = capped(1 << 20);
  tiny.max_states = 10;
  EXPECT_EQ(bfs_reach(Model::M1, BigInt(1), BigInt(100000), tiny).status, SearchStatus::exhausted);
  EXPECT_THROW(bfs_reach(Model::M1, BigInt(1), BigInt(2), capped(0)), DomainViolation);
}

TEST(FindTest, DescendingWitness) {
  for (int a = 2; a <= 500; ++a) {
    const auto r = bfs_find(Model::MS, BigInt(a), [&](const BigInt& v) { return v < a; }, capped(a << 20));
    ASSERT_TRUE(r.found()) << a;
    ASSERT_LT(r.path->end(), a);
    ASSERT_FALSE(revalidate(r.path->to_trace()).has_value());
  }
}

TEST(FindTest, ClosedWalkNeedsAStep) {
  const auto r = bfs_find(Model::M1, BigInt(5), [](const BigInt& v) { return v == 5; }, capped(1000), false);
  ASSERT_TRUE(r.found());
  EXPECT_GT(r.path->length(), 0u);
  EXPECT_EQ(r.path->end(), 5);
  const auto e = bfs_find(Model::M1, BigInt(5), [](const BigInt& v) { return v == 5; }, capped(1000), true);
  EXPECT_EQ(e.path->length(), 0u);
}

TEST(TrajectoryTest, KnownOrbits) {
  const auto p = trajectory(BigInt(6));
  std::vector<BigInt> want{6, 3, 10, 5, 16, 8, 4, 2, 1};
  EXPECT_EQ(p.values, want);
  EXPECT_EQ(trajectory(BigInt(1)).length(), 0u);
  EXPECT_THROW(trajectory(BigInt(0)), DomainViolation);
  EXPECT_THROW(trajectory(BigInt(27), 50), DepthExceeded);
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    const auto o = oracle::orbit(n);
    ASSERT_EQ(trajectory(BigInt(n)).values.size(), o.size());
  }
}

TEST(StatsTest, TwentySeven) {
  const auto row = trajectory_stats(BigInt(27));
  EXPECT_EQ(row.steps, 111u);
  EXPECT_EQ(row.peak, 9232);
  EXPECT_FALSE(row.depth_exceeded);
  EXPECT_TRUE(trajectory_stats(BigInt(27), 10).depth_exceeded);
}

TEST(StatsTest, Csv) {
  std::ostringstream out;
  write_stats_csv_header(out);
  stopping_stats(BigInt(1), BigInt(3), 1000, [&](const StatsRow& r) { write_stats_csv_row(out, r); });
  EXPECT_EQ(out.str(), "n,steps,peak\n1,0,1\n2,1,2\n3,7,16\n");
  std::ostringstream cut;
  write_stats_csv_row(cut, trajectory_stats(BigInt(27), 5));
  EXPECT_EQ(cut.str().substr(0, 18), "27,depth_exceeded,");
  EXPECT_THROW(stopping_stats(BigInt(0), BigInt(3), 10, [](const StatsRow&) {}), DomainViolation);
}

}  // namespace
}  // namespace collatz
