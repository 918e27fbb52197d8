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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "collatz/model.hpp"
#include "collatz/numeral.hpp"

namespace collatz {

/// T: x -> 3x+1, B: x -> x/2, F: x -> (x-1)/3, D: x -> 2x.
enum class Action : std::uint8_t { T, B, F, D };

/// Successor lists, traversal and tie-breaks all follow this order.
inline constexpr std::array<Action, 4> kActionOrder = {Action::T, Action::B, Action::F,
                                                       Action::D};

constexpr char to_char(Action a) noexcept { return "TBFD"[static_cast<int>(a)]; }

constexpr std::optional<Action> action_from_char(char c) noexcept {
  switch (c) {
    case 'T': return Action::T;
    case 'B': return Action::B;
    case 'F': return Action::F;
    case 'D': return Action::D;
    default: return std::nullopt;
  }
}

/// T <-> F, B <-> D.
constexpr Action inverse(Action a) noexcept {
  switch (a) {
    case Action::T: return Action::F;
    case Action::F: return Action::T;
    case Action::B: return Action::D;
    case Action::D: return Action::B;
  }
  return a;
}

/// Application order reads left to right, first letter applied first.
/// Composition order is the same word reversed (f(g(x)) written "fg").
enum class SeqOrder { application, composition };

class ActionSeq {
 public:
  ActionSeq() = default;
  explicit ActionSeq(std::vector<Action> steps) : steps_(std::move(steps)) {}

  /// Quotes and whitespace are skipped; any other non-action character is a
  /// ParseError carrying its index in `text`.
  static ActionSeq parse(std::string_view text, SeqOrder order = SeqOrder::application);

  /// Application order, letters only.
  std::string str() const;
  const std::string& source_text() const noexcept { return source_text_; }
  const std::vector<Action>& steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  Action operator[](std::size_t i) const { return steps_[i]; }
  auto begin() const noexcept { return steps_.begin(); }
  auto end() const noexcept { return steps_.end(); }

  /// Reversed, each action replaced by its inverse.
  ActionSeq inverse() const;

  ActionSeq& push_back(Action a) {
    steps_.push_back(a);
    return *this;
  }
  ActionSeq& append(const ActionSeq& other);

  friend bool operator==(const ActionSeq& a, const ActionSeq& b) { return a.steps_ == b.steps_; }

 private:
  std::vector<Action> steps_;
  std::string source_text_;
};

inline ActionSeq parse_seq(std::string_view text, SeqOrder order = SeqOrder::application) {
  return ActionSeq::parse(text, order);
}
inline ActionSeq inverse_seq(const ActionSeq& seq) { return seq.inverse(); }

// Guard table:
//   M0: T iff x odd; B iff x even; F, D never.
//   MS: T iff x odd; B iff x even; F iff x = 1 (mod 3).
//   M1: T always;    B iff x even; F iff x = 1 (mod 3); D always.
//   M2: T, B, D always; F iff x > 1 so the result stays positive.
// Integer models additionally need F's result to be a positive integer,
// which rules out x = 1.

bool guard_allows(Action a, const BigInt& x, Model m);
bool guard_allows(Action a, const Rat& x, Model m);

/// Exact function value of `a` at `x`. Throws GuardViolation when the guard
/// fails and DomainViolation when the value is outside the model's domain.
/// The integer overload rejects M2, whose values are rational.
BigInt apply(Action a, const BigInt& x, Model m);
Rat apply(Action a, const Rat& x, Model m);

template <typename V>
struct TraceStep {
  Action action;
  V value;  // value after the action

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/// One application of a sequence under a model's guards, every intermediate
/// kept.
template <typename V>
struct BasicTrace {
  Model model = Model::M1;
  V start{};
  std::vector<TraceStep<V>> steps;

  const V& end() const { return steps.empty() ? start : steps.back().value; }

  ActionSeq actions() const {
    ActionSeq seq;
    for (const auto& s : steps) seq.push_back(s.action);
    return seq;
  }

  friend bool operator==(const BasicTrace&, const BasicTrace&) = default;
};

using Trace = BasicTrace<BigInt>;
using RatTrace = BasicTrace<Rat>;

struct StepFailure {
  enum class Kind { guard, domain };

  std::size_t step_index = 0;
  Kind kind = Kind::guard;
  std::string reason;
};

/// Result of a non-throwing application: the trace up to (not including)
/// the failing step, plus the failure if any.
template <typename V>
struct SeqOutcome {
  BasicTrace<V> trace;
  std::optional<StepFailure> failure;

  bool ok() const noexcept { return !failure.has_value(); }
};

SeqOutcome<BigInt> try_apply_seq(const ActionSeq& seq, const BigInt& x, Model m);
SeqOutcome<Rat> try_apply_seq(const ActionSeq& seq, const Rat& x, Model m);

/// Fails fast: throws GuardViolation / DomainViolation tagged with the
/// index of the first illegal step.
Trace apply_seq(const ActionSeq& seq, const BigInt& x, Model m);
RatTrace apply_seq(const ActionSeq& seq, const Rat& x, Model m);

/// Replays a recorded trace and reports the first step whose guard or value
/// disagrees with the recording.
std::optional<StepFailure> revalidate(const Trace& trace);

/// Unguarded evaluation over signed rationals (the algebraic identities pass
/// through zero and negative values). Intermediates, including the start,
/// are appended to `values` when it is non-null.
SignedRational evaluate_identity(const ActionSeq& seq, const SignedRational& x,
                                 std::vector<SignedRational>* values = nullptr);

}  // namespace collatz
