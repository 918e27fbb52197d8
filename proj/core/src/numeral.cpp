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

#include "collatz/numeral.hpp"

#include <algorithm>
#include <utility>

#include "collatz/errors.hpp"

namespace collatz {
namespace {

// Largest power of three below 2^64; conversions move 40 digits at a time.
constexpr unsigned kChunkDigits = 40;
constexpr std::uint64_t kChunk = 12157665459056928801ULL;  // 3^40

}  // namespace

BigInt parse_bigint(std::string_view text) {
  const bool negative = !text.empty() && text.front() == '-';
  const std::size_t first = negative ? 1 : 0;
  if (text.size() == first) throw ParseError("empty integer", first);
  BigInt n = 0;
  for (std::size_t i = first; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') throw ParseError("expected decimal digit", i);
    n *= 10;
    n += c - '0';
  }
  return negative ? BigInt(-n) : n;
}

std::string to_decimal(const BigInt& n) { return n.str(); }

Ternary::Ternary(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {}

bool Ternary::normalize(std::vector<std::uint8_t>& digits) {
  while (!digits.empty() && digits.back() == 0) digits.pop_back();
  return !digits.empty();
}

Ternary Ternary::from_integer(const BigInt& n) {
  if (n < 1) throw DomainViolation("ternary form needs a positive integer, got " + n.str());
  std::vector<std::uint8_t> digits;
  BigInt rest = n;
  const BigInt chunk = kChunk;
  while (rest > 0) {
    BigInt q;
    BigInt r;
    boost::multiprecision::divide_qr(rest, chunk, q, r);
    auto low = r.convert_to<std::uint64_t>();
    const bool last = q == 0;
    for (unsigned i = 0; i < kChunkDigits && (!last || low > 0); ++i) {
      digits.push_back(static_cast<std::uint8_t>(low % 3));
      low /= 3;
    }
    rest = std::move(q);
  }
  normalize(digits);
  return Ternary(std::move(digits));
}

Ternary Ternary::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty ternary numeral", 0);
  std::vector<std::uint8_t> digits(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '2') throw ParseError("expected ternary digit", i);
    digits[text.size() - 1 - i] = static_cast<std::uint8_t>(c - '0');
  }
  if (digits.back() == 0) throw ParseError("leading zero in ternary numeral", 0);
  return Ternary(std::move(digits));
}

BigInt Ternary::value() const {
  BigInt n = 0;
  std::size_t end = digits_.size();
  while (end > 0) {
    const std::size_t begin = end >= kChunkDigits ? end - kChunkDigits : 0;
    std::uint64_t low = 0;
    std::uint64_t scale = 1;
    for (std::size_t i = end; i-- > begin;) {
      low = low * 3 + digits_[i];
      scale *= 3;
    }
    n *= scale;
    n += low;
    end = begin;
  }
  return n;
}

std::string Ternary::str() const {
  std::string s(digits_.size(), '0');
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    s[digits_.size() - 1 - i] = static_cast<char>('0' + digits_[i]);
  }
  return s;
}

bool Ternary::is_even() const noexcept {
  unsigned odd = 0;
  for (auto d : digits_) odd ^= d & 1U;
  return odd == 0;
}

Ternary Ternary::append_digit(int d) const {
  if (d < 0 || d > 2) throw DomainViolation("ternary digit out of range: " + std::to_string(d));
  std::vector<std::uint8_t> out;
  out.reserve(digits_.size() + 1);
  out.push_back(static_cast<std::uint8_t>(d));
  out.insert(out.end(), digits_.begin(), digits_.end());
  return Ternary(std::move(out));
}

Ternary Ternary::strip_trailing_one() const {
  if (last_digit() != 1) {
    throw GuardViolation("last ternary digit of " + str() + " is not 1");
  }
  if (digits_.size() == 1) throw DomainViolation("erasing the last digit of 1 leaves 0");
  return Ternary(std::vector<std::uint8_t>(digits_.begin() + 1, digits_.end()));
}

Ternary Ternary::doubled() const {
  std::vector<std::uint8_t> out;
  out.reserve(digits_.size() + 1);
  unsigned carry = 0;
  for (auto d : digits_) {
    const unsigned t = 2U * d + carry;
    out.push_back(static_cast<std::uint8_t>(t % 3));
    carry = t / 3;
  }
  if (carry != 0) out.push_back(static_cast<std::uint8_t>(carry));
  return Ternary(std::move(out));
}

Ternary Ternary::halved() const {
  if (!is_even()) throw GuardViolation(str() + " is odd; halving needs an even value");
  return floor_halved(1);
}

Ternary Ternary::floor_halved(unsigned k) const {
  std::vector<std::uint8_t> cur = digits_;
  for (unsigned step = 0; step < k; ++step) {
    unsigned rem = 0;
    for (std::size_t i = cur.size(); i-- > 0;) {
      const unsigned t = rem * 3 + cur[i];
      cur[i] = static_cast<std::uint8_t>(t / 2);
      rem = t % 2;
    }
    if (!normalize(cur)) {
      throw DomainViolation("floor-halving " + str() + " " + std::to_string(k) +
                            " times reaches 0");
    }
  }
  return Ternary(std::move(cur));
}

Rat::Rat(const BigInt& integer) : q_(integer) {
  if (integer < 0) throw DomainViolation("Rat must be non-negative");
}

Rat::Rat(const BigInt& num, const BigInt& den) {
  if (den <= 0) throw DomainViolation("Rat denominator must be positive");
  if (num < 0) throw DomainViolation("Rat must be non-negative");
  q_ = SignedRational(num, den);
}

Rat::Rat(const SignedRational& q) : q_(q) {
  if (q < 0) throw DomainViolation("Rat must be non-negative");
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_bigint(text));
  const BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den;
  try {
    den = parse_bigint(text.substr(slash + 1));
  } catch (const ParseError& e) {
    throw ParseError("bad denominator", slash + 1 + e.position());
  }
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  return Rat(num, den);
}

BigInt Rat::num() const { return boost::multiprecision::numerator(q_); }
BigInt Rat::den() const { return boost::multiprecision::denominator(q_); }
bool Rat::is_integer() const { return den() == 1; }
bool Rat::is_zero() const { return q_ == 0; }

std::string Rat::str() const {
  return is_integer() ? num().str() : num().str() + "/" + den().str();
}

bool Rat::den_is_2_3_smooth() const {
  BigInt d = den();
  while (d % 2 == 0) d /= 2;
  while (d % 3 == 0) d /= 3;
  return d == 1;
}

ClusterIndex cluster_decompose(const BigInt& n) {
  if (n < 1) throw DomainViolation("cluster index needs a positive integer");
  ClusterIndex c;
  BigInt r;
  boost::multiprecision::divide_qr(n, BigInt(9), c.k, r);
  c.residue = r.convert_to<unsigned>();
  return c;
}

BigInt floor_halve(const BigInt& n, unsigned k) { return n >> k; }

}  // namespace collatz
