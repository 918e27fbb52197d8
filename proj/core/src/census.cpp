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

#include "collatz/census.hpp"

#include <algorithm>
#include <unordered_map>

namespace collatz {

std::vector<std::vector<NodeId>> strongly_connected_components(const BoundedGraph& g) {
  const NodeId n = g.max_value();
  constexpr std::uint64_t kUnset = ~std::uint64_t{0};
  std::vector<std::uint64_t> index(n + 1, kUnset);
  std::vector<std::uint64_t> low(n + 1, 0);
  std::vector<bool> on_stack(n + 1, false);
  std::vector<NodeId> stack;
  std::vector<std::vector<NodeId>> out;
  std::uint64_t counter = 0;

  struct Frame {
    NodeId v;
    std::size_t next;
  };
  std::vector<Frame> call;
  for (NodeId root = 1; root <= n; ++root) {
    if (index[root] != kUnset) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto targets = g.targets(f.v);
      if (f.next < targets.size()) {
        const NodeId w = targets[f.next++];
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const NodeId v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<NodeId> comp;
        NodeId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Johnson's elementary circuit search inside one component.
class CircuitFinder {
 public:
  CircuitFinder(const BoundedGraph& g, const std::vector<NodeId>& comp, std::size_t limit,
                std::vector<std::vector<NodeId>>& out)
      : g_(g), comp_(comp), limit_(limit), out_(out) {}

  bool run() {
    for (std::size_t i = 0; i < comp_.size(); ++i) {
      start_ = comp_[i];
      for (std::size_t j = i; j < comp_.size(); ++j) {
        blocked_[comp_[j]] = false;
        blockers_[comp_[j]].clear();
      }
      circuit(start_);
      if (out_.size() >= limit_) return false;
    }
    return true;
  }

 private:
  bool allowed(NodeId w) const {
    return w >= start_ && std::binary_search(comp_.begin(), comp_.end(), w);
  }

  void unblock(NodeId u) {
    std::vector<NodeId> work{u};
    while (!work.empty()) {
      const NodeId x = work.back();
      work.pop_back();
      if (!blocked_[x]) continue;
      blocked_[x] = false;
      for (NodeId w : blockers_[x]) work.push_back(w);
      blockers_[x].clear();
    }
  }

  bool circuit(NodeId v) {
    if (out_.size() >= limit_) return true;
    bool found = false;
    path_.push_back(v);
    blocked_[v] = true;
    for (NodeId w : g_.targets(v)) {
      if (!allowed(w)) continue;
      if (w == start_) {
        out_.push_back(path_);
        found = true;
        if (out_.size() >= limit_) break;
      } else if (!blocked_[w] && circuit(w)) {
        found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (NodeId w : g_.targets(v)) {
        if (!allowed(w)) continue;
        auto& b = blockers_[w];
        if (std::find(b.begin(), b.end(), v) == b.end()) b.push_back(v);
      }
    }
    path_.pop_back();
    return found;
  }

  const BoundedGraph& g_;
  const std::vector<NodeId>& comp_;
  std::size_t limit_;
  std::vector<std::vector<NodeId>>& out_;
  NodeId start_ = 0;
  std::vector<NodeId> path_;
  std::unordered_map<NodeId, bool> blocked_;
  std::unordered_map<NodeId, std::vector<NodeId>> blockers_;
};

}  // namespace

CensusResult cycle_census(const BoundedGraph& g, std::size_t max_cycles) {
  CensusResult r;
  r.model = g.model();
  r.max_value = g.max_value();
  for (const auto& comp : strongly_connected_components(g)) {
    if (comp.size() == 1) {
      const auto t = g.targets(comp[0]);
      if (std::find(t.begin(), t.end(), comp[0]) == t.end()) continue;
    }
    CircuitFinder finder(g, comp, max_cycles, r.cycles);
    if (!finder.run()) {
      r.truncated = true;
      break;
    }
  }
  std::sort(r.cycles.begin(), r.cycles.end());
  return r;
}

CensusResult cycle_census(Model m, NodeId max_value, std::size_t max_cycles) {
  return cycle_census(bounded_graph(m, max_value), max_cycles);
}

}  // namespace collatz
