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

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace collatz {

using BigInt = boost::multiprecision::cpp_int;

/// Signed exact rational. Only the identity evaluator works over this type;
/// graph-facing code uses Rat.
using SignedRational = boost::multiprecision::cpp_rational;

/// Parses a decimal integer with optional leading minus. Throws ParseError
/// on anything else.
BigInt parse_bigint(std::string_view text);

std::string to_decimal(const BigInt& n);

/// Base-3 view of a positive integer.
///
/// Digits are stored least-significant first so that appending a digit
/// (3A + d) and erasing the last one are O(1) at the back of the vector.
/// str() renders most-significant first, the way suffix notation such as
/// "A10" or "A211" reads.
class Ternary {
 public:
  /// Throws DomainViolation for n < 1.
  static Ternary from_integer(const BigInt& n);
  /// Digits '0'..'2', most significant first, no leading zero.
  static Ternary parse(std::string_view text);

  BigInt value() const;
  std::string str() const;

  std::size_t size() const noexcept { return digits_.size(); }
  /// Least-significant-first digit view.
  std::span<const std::uint8_t> digits() const noexcept { return digits_; }
  int last_digit() const noexcept { return digits_.front(); }
  /// Parity from the digits alone: 3 is odd, so n and its digit sum agree
  /// mod 2.
  bool is_even() const noexcept;

  /// 3A + d.
  Ternary append_digit(int d) const;
  /// (A - 1) / 3. Throws GuardViolation if the last digit is not 1 and
  /// DomainViolation if the result would be 0.
  Ternary strip_trailing_one() const;
  /// 2A, carries propagated digit by digit.
  Ternary doubled() const;
  /// A / 2 by base-3 long division. Throws GuardViolation on odd input.
  Ternary halved() const;
  /// k-fold floor halving. Throws DomainViolation if the result is 0.
  Ternary floor_halved(unsigned k) const;

  friend bool operator==(const Ternary&, const Ternary&) = default;

 private:
  explicit Ternary(std::vector<std::uint8_t> digits);
  /// Removes most-significant zeros; returns false if nothing is left.
  static bool normalize(std::vector<std::uint8_t>& digits);

  std::vector<std::uint8_t> digits_;
};

inline Ternary to_ternary(const BigInt& n) { return Ternary::from_integer(n); }
inline BigInt from_ternary(const Ternary& t) { return t.value(); }

/// Exact non-negative rational in lowest terms.
class Rat {
 public:
  Rat() = default;
  Rat(const BigInt& integer);  // NOLINT(google-explicit-constructor)
  Rat(const BigInt& num, const BigInt& den);
  /// Throws DomainViolation if q < 0.
  explicit Rat(const SignedRational& q);

  /// "n" or "n/d".
  static Rat parse(std::string_view text);

  BigInt num() const;
  BigInt den() const;
  bool is_integer() const;
  bool is_zero() const;
  const SignedRational& exact() const noexcept { return q_; }
  std::string str() const;

  /// True if den has no prime factors other than 2 and 3.
  bool den_is_2_3_smooth() const;

  friend bool operator==(const Rat&, const Rat&) = default;
  friend auto operator<=>(const Rat& a, const Rat& b) {
    return a.q_ < b.q_ ? std::strong_ordering::less
           : b.q_ < a.q_ ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }

 private:
  SignedRational q_;
};

enum class ClusterKind { five, three, eight };

/// n = 9k + residue; the residue picks the cluster the value belongs to.
struct ClusterIndex {
  BigInt k;
  unsigned residue = 0;

  ClusterKind kind() const noexcept {
    if (residue <= 4) return ClusterKind::five;
    if (residue <= 7) return ClusterKind::three;
    return ClusterKind::eight;
  }
};

/// Throws DomainViolation for n < 1.
ClusterIndex cluster_decompose(const BigInt& n);

/// floor(n / 2^k), n >= 0.
BigInt floor_halve(const BigInt& n, unsigned k);

}  // namespace collatz
