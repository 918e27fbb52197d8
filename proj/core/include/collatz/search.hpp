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
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "collatz/actions.hpp"
#include "collatz/model.hpp"
#include "collatz/numeral.hpp"

namespace collatz {

/// Caps for a bounded search. The value cap is applied to generated states
/// before they are enqueued; max_states is a safety net on the visited set.
struct SearchBounds {
  BigInt max_value = BigInt(1) << 20;
  std::size_t max_depth = 64;
  std::size_t max_states = std::size_t{1} << 21;

  /// max_value = input * 2^value_shift.
  static SearchBounds relative_to(const BigInt& input, unsigned value_shift = 20,
                                  std::size_t max_depth = 64);

  /// Throws DomainViolation unless every cap is >= 1.
  void validate() const;
};

/// A witness walk under one model; values[0] == start and
/// values.size() == actions.size() + 1.
struct Path {
  Model model = Model::M1;
  ActionSeq actions;
  std::vector<BigInt> values;

  const BigInt& start() const { return values.front(); }
  const BigInt& end() const { return values.back(); }
  std::size_t length() const noexcept { return actions.size(); }

  /// "7 -F-> 2 -B-> 1".
  std::string str() const;
  Trace to_trace() const;
};

enum class SearchStatus {
  found,
  /// The frontier emptied: no path exists among values <= max_value.
  unreachable,
  /// max_depth or max_states cut the search short.
  exhausted,
};

std::string_view to_string(SearchStatus s) noexcept;

struct ReachResult {
  SearchStatus status = SearchStatus::unreachable;
  std::optional<Path> path;
  std::size_t states = 0;

  bool found() const noexcept { return status == SearchStatus::found; }
};

/// Shortest path from start to target by step count. Runs two breadth-first
/// frontiers (successors from start, predecessors from target) level by
/// level, expanding moves in T, B, F, D order, so the returned witness is
/// deterministic. Integer models only.
ReachResult bfs_reach(Model m, const BigInt& start, const BigInt& target, const SearchBounds& bounds);

/// Breadth-first search from start to the first value satisfying `goal`.
/// The start itself counts only when `allow_empty` is set; otherwise the
/// walk needs at least one step (closed walks back to start are found).
ReachResult bfs_find(Model m, const BigInt& start, const std::function<bool(const BigInt&)>& goal,
                     const SearchBounds& bounds, bool allow_empty = true);

inline constexpr std::size_t kDefaultTrajectoryCap = 100000;

/// The M0 orbit of n down to 1. Throws DepthExceeded if 1 is not reached
/// within max_steps.
Path trajectory(const BigInt& n, std::size_t max_steps = kDefaultTrajectoryCap);

struct StatsRow {
  BigInt n;
  std::size_t steps = 0;  // total stopping time
  BigInt peak;
  bool depth_exceeded = false;
};

/// Steps and peak of n's M0 orbit without storing it.
StatsRow trajectory_stats(const BigInt& n, std::size_t max_steps = kDefaultTrajectoryCap);

/// One row per n in [lo, hi], emitted in ascending n as they are computed.
void stopping_stats(const BigInt& lo, const BigInt& hi, std::size_t max_steps,
                    const std::function<void(const StatsRow&)>& sink);

/// CSV with header "n,steps,peak"; rows over the cap get "depth_exceeded"
/// in the steps column.
void write_stats_csv_header(std::ostream& out);
void write_stats_csv_row(std::ostream& out, const StatsRow& row);

}  // namespace collatz
