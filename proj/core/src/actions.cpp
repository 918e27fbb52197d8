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

#include "collatz/actions.hpp"

#include <algorithm>
#include <cctype>

#include "collatz/errors.hpp"

namespace collatz {

std::optional<Model> parse_model(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (s == "M0") return Model::M0;
  if (s == "MS") return Model::MS;
  if (s == "M1") return Model::M1;
  if (s == "M2") return Model::M2;
  return std::nullopt;
}

ActionSeq ActionSeq::parse(std::string_view text, SeqOrder order) {
  ActionSeq seq;
  seq.source_text_ = std::string(text);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\'' || c == '"' || c == '`' || std::isspace(static_cast<unsigned char>(c))) {
      continue;
    }
    const auto a = action_from_char(c);
    if (!a) throw ParseError(std::string("invalid action symbol '") + c + "'", i);
    seq.steps_.push_back(*a);
  }
  if (seq.steps_.empty()) throw ParseError("empty action sequence", 0);
  if (order == SeqOrder::composition) std::reverse(seq.steps_.begin(), seq.steps_.end());
  return seq;
}

std::string ActionSeq::str() const {
  std::string s;
  s.reserve(steps_.size());
  for (auto a : steps_) s.push_back(to_char(a));
  return s;
}

ActionSeq ActionSeq::inverse() const {
  std::vector<Action> inv;
  inv.reserve(steps_.size());
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) inv.push_back(collatz::inverse(*it));
  return ActionSeq(std::move(inv));
}

ActionSeq& ActionSeq::append(const ActionSeq& other) {
  steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
  return *this;
}

namespace {

bool is_even(const BigInt& x) { return !boost::multiprecision::bit_test(x, 0); }

bool integer_guard(Action a, const BigInt& x, Model m) {
  const bool even = is_even(x);
  switch (a) {
    case Action::T: return m == Model::M1 || !even;
    case Action::B: return even;
    case Action::F: return m != Model::M0 && x % 3 == 1;
    case Action::D: return m == Model::M1;
  }
  return false;
}

std::string describe(Action a, const std::string& x, Model m) {
  return std::string(1, to_char(a)) + " is not allowed at " + x + " in " +
         std::string(to_string(m));
}

BigInt apply_integer(Action a, const BigInt& x, Model m) {
  if (x < 1) throw DomainViolation("value " + x.str() + " is not a positive integer");
  if (!integer_guard(a, x, m)) throw GuardViolation(describe(a, x.str(), m));
  switch (a) {
    case Action::T: return 3 * x + 1;
    case Action::B: return x >> 1;
    case Action::F:
      if (x == 1) throw DomainViolation("F(1) = 0 is not a positive integer");
      return (x - 1) / 3;
    case Action::D: return x << 1;
  }
  return x;
}

Rat apply_m2(Action a, const Rat& x) {
  if (x.is_zero()) throw DomainViolation("M2 values must be positive");
  const SignedRational& q = x.exact();
  switch (a) {
    case Action::T: return Rat(SignedRational(3 * q + 1));
    case Action::B: return Rat(SignedRational(q / 2));
    case Action::F:
      if (q <= 1) throw GuardViolation(describe(a, x.str(), Model::M2) + " (needs x > 1)");
      return Rat(SignedRational((q - 1) / 3));
    case Action::D: return Rat(SignedRational(2 * q));
  }
  return x;
}

template <typename V>
SeqOutcome<V> run(const ActionSeq& seq, const V& x, Model m) {
  SeqOutcome<V> out;
  out.trace.model = m;
  out.trace.start = x;
  out.trace.steps.reserve(seq.size());
  const V* cur = &x;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    try {
      V next = apply(seq[i], *cur, m);
      out.trace.steps.push_back({seq[i], std::move(next)});
      cur = &out.trace.steps.back().value;
    } catch (const GuardViolation& e) {
      out.failure = StepFailure{i, StepFailure::Kind::guard, e.what()};
      break;
    } catch (const DomainViolation& e) {
      out.failure = StepFailure{i, StepFailure::Kind::domain, e.what()};
      break;
    }
  }
  return out;
}

template <typename V>
BasicTrace<V> run_or_throw(const ActionSeq& seq, const V& x, Model m) {
  auto out = run(seq, x, m);
  if (out.failure) {
    if (out.failure->kind == StepFailure::Kind::guard) {
      throw GuardViolation(out.failure->reason, out.failure->step_index);
    }
    throw DomainViolation(out.failure->reason, out.failure->step_index);
  }
  return std::move(out.trace);
}

}  // namespace

bool guard_allows(Action a, const BigInt& x, Model m) {
  if (m == Model::M2) return a != Action::F || x > 1;
  if (!integer_guard(a, x, m)) return false;
  return a != Action::F || x > 1;
}

bool guard_allows(Action a, const Rat& x, Model m) {
  if (m == Model::M2) return a != Action::F || x.exact() > 1;
  return x.is_integer() && guard_allows(a, x.num(), m);
}

BigInt apply(Action a, const BigInt& x, Model m) {
  if (m == Model::M2) throw DomainViolation("M2 values are rational; apply it to a Rat");
  return apply_integer(a, x, m);
}

Rat apply(Action a, const Rat& x, Model m) {
  if (m == Model::M2) return apply_m2(a, x);
  if (!x.is_integer()) throw DomainViolation(x.str() + " is not an integer");
  return Rat(apply_integer(a, x.num(), m));
}

SeqOutcome<BigInt> try_apply_seq(const ActionSeq& seq, const BigInt& x, Model m) {
  return run(seq, x, m);
}

SeqOutcome<Rat> try_apply_seq(const ActionSeq& seq, const Rat& x, Model m) {
  return run(seq, x, m);
}

Trace apply_seq(const ActionSeq& seq, const BigInt& x, Model m) { return run_or_throw(seq, x, m); }

RatTrace apply_seq(const ActionSeq& seq, const Rat& x, Model m) { return run_or_throw(seq, x, m); }

std::optional<StepFailure> revalidate(const Trace& trace) {
  const BigInt* cur = &trace.start;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    try {
      if (apply(step.action, *cur, trace.model) != step.value) {
        return StepFailure{i, StepFailure::Kind::domain, "recorded value differs from replay"};
      }
    } catch (const GuardViolation& e) {
      return StepFailure{i, StepFailure::Kind::guard, e.what()};
    } catch (const DomainViolation& e) {
      return StepFailure{i, StepFailure::Kind::domain, e.what()};
    }
    cur = &step.value;
  }
  return std::nullopt;
}

SignedRational evaluate_identity(const ActionSeq& seq, const SignedRational& x,
                                 std::vector<SignedRational>* values) {
  SignedRational q = x;
  if (values) values->push_back(q);
  for (auto a : seq) {
    switch (a) {
      case Action::T: q = 3 * q + 1; break;
      case Action::B: q /= 2; break;
      case Action::F: q = (q - 1) / 3; break;
      case Action::D: q *= 2; break;
    }
    if (values) values->push_back(q);
  }
  return q;
}

}  // namespace collatz
