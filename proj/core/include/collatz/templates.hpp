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

#include <string>
#include <string_view>
#include <vector>

#include "collatz/numeral.hpp"

namespace collatz {

/// Bindings for the symbols a value template may use. A is the instance
/// parameter; R is A with its last ternary digit erased and P = R - 1.
/// n counts repeated suffix digits.
struct TemplateContext {
  BigInt a;
  BigInt r;
  BigInt p;
  int n = 0;

  static TemplateContext for_parameter(const BigInt& a, int n = 0);
};

/// A value written in suffix notation: a head term followed by ternary
/// digits appended to it.
///
///   head    := primary postfix*
///   primary := 'A' | 'R' | 'P' | '(' head [('+'|'-') int] ')'
///   postfix := '^' 'D'+  |  '^{' 'D'+ '}'  |  '_' int
///   suffix  := ( digit | digit '{n' [('+'|'-') int] '}' )*
///
/// X^D doubles X, X_k floor-halves it k times. Whitespace separates the
/// head from the suffix and is otherwise ignored. With no head the suffix
/// is read as a plain ternary numeral ("11" is 4).
///
///   "A10"            -> 9A + 3
///   "(A^DD+1)111"    -> 27(4A + 1) + 13
///   "A_1 102"        -> 27 floor(A/2) + 11
///   "R0 2{n}"        -> R, then 0, then n twos
class ValueTemplate {
 public:
  static ValueTemplate parse(std::string_view text);

  /// Throws DomainViolation if the head evaluates below zero.
  BigInt eval(const TemplateContext& ctx) const;
  const std::string& text() const noexcept { return text_; }
  bool uses_n() const noexcept;

 private:
  enum class Op { load_a, load_r, load_p, load_zero, double_it, halve, add };
  struct Instr {
    Op op;
    long arg = 0;
  };
  struct Digits {
    int digit;
    bool repeat_n;  // repeated n + offset times, otherwise once
    int offset;
  };

  std::string text_;
  std::vector<Instr> head_;
  std::vector<Digits> suffix_;

  friend class TemplateParser;
};

}  // namespace collatz
