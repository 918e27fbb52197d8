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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "collatz/actions.hpp"
#include "collatz/catalog.hpp"
#include "collatz/search.hpp"

namespace collatz {

struct VerifyOptions {
  /// Search caps relative to the value being searched from.
  unsigned value_shift = 20;
  std::size_t max_depth = 64;
  std::size_t max_states = std::size_t{1} << 21;
  /// Absolute value cap for cluster searches.
  BigInt cluster_bound = BigInt(1) << 20;
  /// Instances (A, n) of indexed claims run for n = 1..append_depth.
  int append_depth = 6;
  /// Delooping searches run below max * 2^headroom_shift.
  unsigned headroom_shift = 10;
  std::size_t trajectory_cap = kDefaultTrajectoryCap;
  std::size_t max_cycles = 100000;
  /// 0 picks COLLATZ_WORKERS or the hardware concurrency.
  unsigned workers = 0;
  std::size_t max_recorded_failures = 1000;
  bool timing = false;

  SearchBounds bounds_for(const BigInt& from) const;
  nlohmann::json to_json() const;
};

struct Failure {
  std::string input;
  std::optional<std::size_t> step_index;
  std::string reason;
  std::optional<Trace> trace;
};

enum class Verdict { pass, fail, skipped };

struct InstanceResult {
  Verdict verdict = Verdict::pass;
  /// Walks that justify a pass; each replays under its model.
  std::vector<Trace> witnesses;
  std::optional<Failure> failure;
  std::string note;
};

struct VerifyReport {
  std::string claim_id;
  Model model = Model::M1;
  BigInt lo;
  BigInt hi;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
  /// At most max_recorded_failures entries; fail counts all of them.
  std::vector<Failure> failures;
  nlohmann::json bounds;
  /// Claim-specific findings (cycles, phase counts, witness sizes).
  nlohmann::json extra = nlohmann::json::object();
  std::optional<double> wall_ms;

  bool ok() const noexcept { return fail == 0; }
  std::size_t total() const noexcept { return pass + fail + skipped; }
};

/// One instance of a per-parameter claim. For indexed claims `n` selects a
/// single (A, n); with n == 0 every n up to the append depth is checked.
InstanceResult verify_instance(const ClaimSpec& spec, const BigInt& a, const VerifyOptions& opts,
                               int n = 0);

/// Checks the claim for every parameter in [lo, hi]. For cluster claims the
/// parameter is the cluster index k; for whole-graph claims hi is the node
/// bound. Output is identical for any worker count.
VerifyReport verify_claim(const ClaimSpec& spec, const BigInt& lo, const BigInt& hi,
                          const VerifyOptions& opts = {});
VerifyReport verify_claim(std::string_view id, const BigInt& lo, const BigInt& hi,
                          const VerifyOptions& opts = {});

/// Offset c in {+1..+4} checks the successor word, -1..-4 the precursor.
VerifyReport verify_succession(int offset, const BigInt& lo, const BigInt& hi);

/// Throws DomainViolation when opts.cluster_bound < 9 * hi + 8.
VerifyReport verify_cluster(ClusterShape shape, const BigInt& k_lo, const BigInt& k_hi,
                            const VerifyOptions& opts = {});

VerifyReport verify_attaching(const BigInt& lo, const BigInt& hi, const VerifyOptions& opts = {});

VerifyReport verify_descending(Model m, const BigInt& lo, const BigInt& hi,
                               const VerifyOptions& opts = {}, const Precondition& pre = {});

VerifyReport verify_edge_loop(const BigInt& lo, const BigInt& hi, const VerifyOptions& opts = {});

}  // namespace collatz
