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

#include "collatz/templates.hpp"

#include <gtest/gtest.h>

#include "collatz/errors.hpp"
#include "oracle.hpp"

namespace collatz {
namespace {

BigInt eval(const char* text, std::int64_t a, int n = 0) {
  return ValueTemplate::parse(text).eval(TemplateContext::for_parameter(BigInt(a), n));
}

TEST(TemplateTest, SuffixDigits) {
  EXPECT_EQ(eval("A10", 2), 21);
  EXPECT_EQ(eval("A 11", 2), 22);
  EXPECT_EQ(eval("11", 99), 4);
  EXPECT_EQ(eval("A", 17), 17);
}

TEST(TemplateTest, HeadOperators) {
  EXPECT_EQ(eval("A^D 202", 2), 128);
  EXPECT_EQ(eval("A^{DD}", 3), 12);
  EXPECT_EQ(eval("(A^DD+1)111", 2), 256);
  EXPECT_EQ(eval("((A^D+1)^D)211", 2), 108 * 2 + 76);
  EXPECT_EQ(eval("A_1 102", 7), 3 * 27 + 11);
  EXPECT_EQ(eval("(A-1)", 5), 4);
}

TEST(TemplateTest, ParameterSymbols) {
  // A = 23 = 212 in base 3, so R = 21 = 7 and P = 6.
  EXPECT_EQ(eval("R", 23), 7);
  EXPECT_EQ(eval("P", 23), 6);
  EXPECT_EQ(eval("R02102", 23), static_cast<std::int64_t>(oracle::from_ternary("2102102")));
}

TEST(TemplateTest, RepeatedDigits) {
  EXPECT_EQ(eval("A 2{n}", 1, 3), static_cast<std::int64_t>(oracle::from_ternary("1222")));
  EXPECT_EQ(eval("A 2{n+1}", 1, 1), static_cast<std::int64_t>(oracle::from_ternary("122")));
  EXPECT_EQ(eval("R^D 1 2{n-1} 12", 4, 1), static_cast<std::int64_t>(oracle::from_ternary("2112")));
  EXPECT_TRUE(ValueTemplate::parse("A 2{n}").uses_n());
  EXPECT_FALSE(ValueTemplate::parse("A22").uses_n());
}

TEST(TemplateTest, MatchesDigitStrings) {
  for (std::int64_t a = 1; a < 300; ++a) {
    const std::string t = oracle::ternary(static_cast<std::uint64_t>(a));
    ASSERT_EQ(eval("A021", a), static_cast<std::int64_t>(oracle::from_ternary(t + "021")));
  }
}

TEST(TemplateTest, Errors) {
  EXPECT_THROW(ValueTemplate::parse(""), ParseError);
  EXPECT_THROW(ValueTemplate::parse("A3"), ParseError);
  EXPECT_THROW(ValueTemplate::parse("X1"), ParseError);
  EXPECT_THROW(ValueTemplate::parse("(A+1"), ParseError);
  EXPECT_THROW(ValueTemplate::parse("A^"), ParseError);
  EXPECT_THROW(ValueTemplate::parse("A 2{m}"), ParseError);
  EXPECT_THROW(eval("P", 1), DomainViolation);  // R = 0
  EXPECT_THROW(eval("A 2{n-2}", 1, 1), DomainViolation);
}

}  // namespace
}  // namespace collatz
