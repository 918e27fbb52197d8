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

#include <cctype>

#include "collatz/errors.hpp"

namespace collatz {

TemplateContext TemplateContext::for_parameter(const BigInt& a, int n) {
  TemplateContext ctx;
  ctx.a = a;
  ctx.r = a / 3;
  ctx.p = ctx.r - 1;
  ctx.n = n;
  return ctx;
}

class TemplateParser {
 public:
  explicit TemplateParser(std::string_view text) : text_(text) {}

  ValueTemplate run() {
    ValueTemplate t;
    t.text_ = std::string(text_);
    skip_ws();
    if (pos_ < text_.size() && !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      head(t.head_);
    } else {
      t.head_.push_back({ValueTemplate::Op::load_zero});
    }
    skip_ws();
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c < '0' || c > '2') fail("expected ternary digit");
      ++pos_;
      ValueTemplate::Digits d{c - '0', false, 0};
      if (peek('{')) {
        ++pos_;
        expect('n');
        d.repeat_n = true;
        if (peek('+') || peek('-')) {
          const int sign = text_[pos_++] == '-' ? -1 : 1;
          d.offset = sign * static_cast<int>(integer());
        }
        expect('}');
      }
      t.suffix_.push_back(d);
      skip_ws();
    }
    if (t.suffix_.empty() && t.head_.front().op == ValueTemplate::Op::load_zero) {
      fail("empty template");
    }
    return t;
  }

 private:
  void head(std::vector<ValueTemplate::Instr>& out) {
    using Op = ValueTemplate::Op;
    if (peek('(')) {
      ++pos_;
      head(out);
      skip_ws();
      if (peek('+') || peek('-')) {
        const long sign = text_[pos_++] == '-' ? -1 : 1;
        skip_ws();
        out.push_back({Op::add, sign * integer()});
        skip_ws();
      }
      expect(')');
    } else if (peek('A')) {
      ++pos_;
      out.push_back({Op::load_a});
    } else if (peek('R')) {
      ++pos_;
      out.push_back({Op::load_r});
    } else if (peek('P')) {
      ++pos_;
      out.push_back({Op::load_p});
    } else {
      fail("expected A, R, P or '('");
    }
    for (;;) {
      if (peek('^')) {
        ++pos_;
        const bool braced = peek('{');
        if (braced) ++pos_;
        std::size_t count = 0;
        while (peek('D')) {
          ++pos_;
          ++count;
        }
        if (count == 0) fail("expected D after '^'");
        if (braced) expect('}');
        for (std::size_t i = 0; i < count; ++i) out.push_back({Op::double_it});
      } else if (peek('_')) {
        ++pos_;
        out.push_back({Op::halve, integer()});
      } else {
        break;
      }
    }
  }

  long integer() {
    const std::size_t start = pos_;
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
    }
    if (pos_ == start) fail("expected integer");
    return v;
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in template '" + std::string(text_) + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

ValueTemplate ValueTemplate::parse(std::string_view text) { return TemplateParser(text).run(); }

bool ValueTemplate::uses_n() const noexcept {
  for (const auto& d : suffix_) {
    if (d.repeat_n) return true;
  }
  return false;
}

BigInt ValueTemplate::eval(const TemplateContext& ctx) const {
  BigInt v;
  for (const auto& ins : head_) {
    switch (ins.op) {
      case Op::load_a: v = ctx.a; break;
      case Op::load_r: v = ctx.r; break;
      case Op::load_p: v = ctx.p; break;
      case Op::load_zero: v = 0; break;
      case Op::double_it: v <<= 1; break;
      case Op::halve: v >>= static_cast<unsigned>(ins.arg); break;
      case Op::add: v += ins.arg; break;
    }
  }
  if (v < 0) throw DomainViolation("head of '" + text_ + "' is negative");
  for (const auto& d : suffix_) {
    const int count = d.repeat_n ? ctx.n + d.offset : 1;
    if (count < 0) throw DomainViolation("negative repeat count in '" + text_ + "'");
    for (int i = 0; i < count; ++i) {
      v *= 3;
      v += d.digit;
    }
  }
  return v;
}

}  // namespace collatz
