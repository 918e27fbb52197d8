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

#include "collatz/search.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <unordered_map>

#include "collatz/errors.hpp"
#include "collatz/models.hpp"

namespace collatz {

SearchBounds SearchBounds::relative_to(const BigInt& input, unsigned value_shift,
                                       std::size_t max_depth) {
  SearchBounds b;
  b.max_value = input << value_shift;
  b.max_depth = max_depth;
  return b;
}

void SearchBounds::validate() const {
  if (max_value < 1 || max_depth < 1 || max_states < 1) {
    throw DomainViolation("search bounds must all be >= 1");
  }
}

std::string Path::str() const {
  std::string s = values.front().str();
  for (std::size_t i = 0; i < actions.size(); ++i) {
    s += " -";
    s += to_char(actions[i]);
    s += "-> ";
    s += values[i + 1].str();
  }
  return s;
}

Trace Path::to_trace() const {
  Trace t;
  t.model = model;
  t.start = values.front();
  for (std::size_t i = 0; i < actions.size(); ++i) t.steps.push_back({actions[i], values[i + 1]});
  return t;
}

std::string_view to_string(SearchStatus s) noexcept {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::unreachable: return "unreachable";
    case SearchStatus::exhausted: return "exhausted";
  }
  return "?";
}

namespace {

// For the forward side `other` is the parent; for the backward side it is
// the value the move leads to.
struct Link {
  BigInt other;
  Action action;
  std::uint32_t depth;
};

using LinkMap = std::unordered_map<BigInt, Link>;

Path join(Model m, const BigInt& start, const BigInt& target, const BigInt& meet, const LinkMap& fwd,
          const LinkMap& bwd) {
  Path p;
  p.model = m;
  std::vector<Action> head;
  std::vector<BigInt> head_values;
  for (BigInt v = meet; v != start;) {
    const Link& l = fwd.at(v);
    head.push_back(l.action);
    head_values.push_back(v);
    v = l.other;
  }
  p.values.push_back(start);
  for (std::size_t i = head.size(); i-- > 0;) {
    p.actions.push_back(head[i]);
    p.values.push_back(head_values[i]);
  }
  for (BigInt v = meet; v != target;) {
    const Link& l = bwd.at(v);
    p.actions.push_back(l.action);
    p.values.push_back(l.other);
    v = l.other;
  }
  return p;
}

}  // namespace

ReachResult bfs_reach(Model m, const BigInt& start, const BigInt& target, const SearchBounds& bounds) {
  bounds.validate();
  ReachResult result;
  if (start == target) {
    result.status = SearchStatus::found;
    result.path = Path{m, ActionSeq{}, {start}};
    result.states = 1;
    return result;
  }
  if (start > bounds.max_value || target > bounds.max_value) {
    result.status = SearchStatus::unreachable;
    return result;
  }

  LinkMap fwd;
  LinkMap bwd;
  fwd.emplace(start, Link{start, Action::T, 0});
  bwd.emplace(target, Link{target, Action::T, 0});
  std::vector<BigInt> fq{start};
  std::vector<BigInt> bq{target};
  std::size_t fdepth = 0;
  std::size_t bdepth = 0;

  while (!fq.empty() && !bq.empty()) {
    if (fdepth + bdepth >= bounds.max_depth) {
      result.status = SearchStatus::exhausted;
      break;
    }
    const bool forward = fq.size() <= bq.size();
    auto& frontier = forward ? fq : bq;
    auto& mine = forward ? fwd : bwd;
    const auto& theirs = forward ? bwd : fwd;
    const auto depth = static_cast<std::uint32_t>((forward ? fdepth : bdepth) + 1);

    std::vector<BigInt> next;
    std::optional<BigInt> meet;
    std::size_t best = 0;
    bool out_of_states = false;
    for (const auto& x : frontier) {
      const auto moves = forward ? successors(x, m) : predecessors(x, m);
      for (const auto& mv : moves) {
        if (mv.value > bounds.max_value || mine.contains(mv.value)) continue;
        mine.emplace(mv.value, Link{x, mv.action, depth});
        if (auto it = theirs.find(mv.value); it != theirs.end()) {
          const std::size_t total = depth + it->second.depth;
          if (!meet || total < best) {
            meet = mv.value;
            best = total;
          }
        }
        next.push_back(mv.value);
        if (fwd.size() + bwd.size() >= bounds.max_states) out_of_states = true;
      }
      if (out_of_states) break;
    }
    (forward ? fdepth : bdepth) += 1;
    result.states = fwd.size() + bwd.size();
    if (meet) {
      result.status = SearchStatus::found;
      result.path = join(m, start, target, *meet, fwd, bwd);
      return result;
    }
    if (out_of_states) {
      result.status = SearchStatus::exhausted;
      return result;
    }
    frontier = std::move(next);
  }
  result.states = fwd.size() + bwd.size();
  if (result.status != SearchStatus::exhausted) result.status = SearchStatus::unreachable;
  return result;
}

ReachResult bfs_find(Model m, const BigInt& start, const std::function<bool(const BigInt&)>& goal,
                     const SearchBounds& bounds, bool allow_empty) {
  bounds.validate();
  ReachResult result;
  if (allow_empty && goal(start)) {
    result.status = SearchStatus::found;
    result.path = Path{m, ActionSeq{}, {start}};
    result.states = 1;
    return result;
  }
  if (start > bounds.max_value) return result;

  LinkMap seen;
  seen.emplace(start, Link{start, Action::T, 0});
  std::vector<BigInt> frontier{start};
  bool cut = false;
  for (std::size_t depth = 0; !frontier.empty(); ++depth) {
    if (depth >= bounds.max_depth) {
      cut = true;
      break;
    }
    std::vector<BigInt> next;
    for (const auto& x : frontier) {
      for (const auto& mv : successors(x, m)) {
        if (mv.value > bounds.max_value) continue;
        if (goal(mv.value)) {
          Path p;
          p.model = m;
          std::vector<Action> rev{mv.action};
          std::vector<BigInt> rev_values{mv.value};
          for (BigInt v = x; v != start;) {
            const Link& l = seen.at(v);
            rev.push_back(l.action);
            rev_values.push_back(v);
            v = l.other;
          }
          p.values.push_back(start);
          for (std::size_t i = rev.size(); i-- > 0;) {
            p.actions.push_back(rev[i]);
            p.values.push_back(rev_values[i]);
          }
          result.status = SearchStatus::found;
          result.path = std::move(p);
          result.states = seen.size();
          return result;
        }
        if (seen.contains(mv.value)) continue;
        seen.emplace(mv.value, Link{x, mv.action, static_cast<std::uint32_t>(depth + 1)});
        next.push_back(mv.value);
        if (seen.size() >= bounds.max_states) {
          result.status = SearchStatus::exhausted;
          result.states = seen.size();
          return result;
        }
      }
    }
    frontier = std::move(next);
  }
  result.states = seen.size();
  result.status = cut ? SearchStatus::exhausted : SearchStatus::unreachable;
  return result;
}

Path trajectory(const BigInt& n, std::size_t max_steps) {
  if (n < 1) throw DomainViolation("trajectory needs n >= 1");
  Path p;
  p.model = Model::M0;
  p.values.push_back(n);
  BigInt x = n;
  while (x != 1) {
    if (p.actions.size() >= max_steps) {
      throw DepthExceeded(n.str() + " did not reach 1 within " + std::to_string(max_steps) +
                          " steps");
    }
    if (boost::multiprecision::bit_test(x, 0)) {
      x *= 3;
      ++x;
      p.actions.push_back(Action::T);
    } else {
      x >>= 1;
      p.actions.push_back(Action::B);
    }
    p.values.push_back(x);
  }
  return p;
}

StatsRow trajectory_stats(const BigInt& n, std::size_t max_steps) {
  if (n < 1) throw DomainViolation("trajectory needs n >= 1");
  StatsRow row;
  row.n = n;
  row.peak = n;
  BigInt x = n;
  while (x != 1) {
    if (row.steps >= max_steps) {
      row.depth_exceeded = true;
      break;
    }
    if (boost::multiprecision::bit_test(x, 0)) {
      x *= 3;
      ++x;
      if (x > row.peak) row.peak = x;
    } else {
      x >>= 1;
    }
    ++row.steps;
  }
  return row;
}

void stopping_stats(const BigInt& lo, const BigInt& hi, std::size_t max_steps,
                    const std::function<void(const StatsRow&)>& sink) {
  if (lo < 1) throw DomainViolation("stopping stats need n >= 1");
  for (BigInt n = lo; n <= hi; ++n) sink(trajectory_stats(n, max_steps));
}

void write_stats_csv_header(std::ostream& out) { out << "n,steps,peak\n"; }

void write_stats_csv_row(std::ostream& out, const StatsRow& row) {
  out << row.n << ',';
  if (row.depth_exceeded) {
    out << "depth_exceeded";
  } else {
    out << row.steps;
  }
  out << ',' << row.peak << '\n';
}

}  // namespace collatz
