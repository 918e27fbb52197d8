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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "collatz/actions.hpp"
#include "collatz/model.hpp"
#include "collatz/numeral.hpp"
#include "collatz/templates.hpp"

namespace collatz {

enum class Parity { any, even, odd };

/// Side condition on the instance parameter A. R is A with its last ternary
/// digit erased.
struct Precondition {
  Parity parity = Parity::any;
  std::optional<unsigned> last_digit;
  Parity r_parity = Parity::any;

  bool holds(const BigInt& a) const;
  bool trivial() const noexcept {
    return parity == Parity::any && !last_digit && r_parity == Parity::any;
  }
  /// "A odd, last digit 1, R even"; empty when trivial.
  std::string str() const;
};

/// One line of a proof. `actions` applies a fixed word; `lemma` applies a
/// catalogued lemma whose script is fixed, or searches when it is not;
/// `search` finds a shortest walk to the checkpoint.
struct ProofStep {
  enum class Kind { actions, lemma, search };

  Kind kind = Kind::actions;
  ActionSeq actions;
  std::string lemma;
  std::optional<ValueTemplate> checkpoint;
};

enum class ClaimKind {
  succession,        // signed identity x -> x + offset
  m2_reach,          // rational precursor chain to 1
  scripted,          // input template, proof steps, expected template
  inverse,           // forward witness replayed backward
  dispatch,          // first case whose precondition holds
  append_reduction,  // strip trailing 2s, then dispatch on the last digit
  cluster,           // pairwise reachability inside a residue cluster
  reach,             // shortest walk from A to a fixed target
  descending,        // walk from A to some smaller value
  edge_loop,         // directed MS walk A -> 3A+1 closing an F edge
  node_loop,         // closed walk through A
  deloop,            // reachability of 1 with F edge classes removed
  m0_orbit,          // standard trajectory reaches 1
  cycle_census,      // every M0 cycle below the bound
};

enum class ClusterShape { five, three, nine };

struct DispatchCase {
  Precondition when;
  std::string claim;
};

/// A machine-checkable statement. Which fields matter depends on `kind`.
struct ClaimSpec {
  std::string id;
  std::string statement;
  ClaimKind kind = ClaimKind::scripted;
  Model model = Model::M1;
  Precondition pre;

  // scripted, reach
  std::optional<ValueTemplate> input;
  std::optional<ValueTemplate> expected;
  std::vector<ProofStep> steps;
  std::optional<ClusterKind> lands_in;
  /// Instances are (A, n) for n = 1..append depth.
  bool indexed = false;

  // inverse: the forward claim, and the word the statement gives if any
  std::string base;
  std::optional<ActionSeq> stated;

  // dispatch, append_reduction
  std::vector<DispatchCase> cases;

  // succession
  ActionSeq sequence;
  int offset = 0;

  // cluster
  ClusterShape shape = ClusterShape::five;
};

/// Every claim, in a fixed order. Ids are stable.
const std::vector<ClaimSpec>& catalog();

/// Throws UnknownClaim, whose message lists the valid ids.
const ClaimSpec& find_claim(std::string_view id);

std::vector<std::string> claim_ids();

/// The single word a claim applies to every instance: the concatenated
/// actions of an unconditional scripted claim, or the inverse of such a
/// word. nullopt when any step searches.
std::optional<ActionSeq> fixed_script(const ClaimSpec& spec);

std::string_view to_string(ClaimKind k) noexcept;
std::string_view to_string(ClusterShape s) noexcept;

}  // namespace collatz
