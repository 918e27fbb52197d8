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

#include "collatz/deloop.hpp"

#include "collatz/errors.hpp"

namespace collatz {

std::vector<bool> reaches_one(Model m, NodeId cap, const EdgeFilter& filter) {
  if (m == Model::M2) throw DomainViolation("M2 has rational nodes and is not materialized");
  if (cap < 1) throw DomainViolation("reachability needs cap >= 1");
  std::vector<bool> seen(cap + 1, false);
  std::vector<NodeId> queue{1};
  seen[1] = true;
  const BigInt bound = cap;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId x = queue[head];
    for (const auto& mv : predecessors(BigInt(x), m)) {
      if (mv.value > bound) continue;
      const NodeId y = mv.value.convert_to<NodeId>();
      if (seen[y] || !filter(Edge{y, mv.action, x})) continue;
      seen[y] = true;
      queue.push_back(y);
    }
  }
  return seen;
}

DeloopResult delooping_experiment(NodeId max_value, unsigned headroom_shift) {
  if (max_value < 1) throw DomainViolation("delooping needs max_value >= 1");
  if (headroom_shift >= 40) throw DomainViolation("headroom shift too large");
  DeloopResult r;
  r.max_value = max_value;
  r.cap = max_value << headroom_shift;
  r.phases[0] = {"MS", {}, 0, {}};
  r.phases[1] = {"MS without E1", {EdgeClass::E1}, 0, {}};
  r.phases[2] = {"MS without E1 and E4", {EdgeClass::E1, EdgeClass::E4}, 0, {}};
  for (auto& phase : r.phases) {
    const EdgeFilter filter = drop_classes(phase.removed);
    const auto seen = reaches_one(Model::MS, r.cap, filter);
    for (NodeId v = 1; v <= max_value; ++v) {
      if (!seen[v]) phase.unreached.push_back(v);
    }
    phase.edges = bounded_graph(Model::MS, max_value, filter).edge_count();
  }
  const auto last = bounded_graph(Model::MS, max_value, drop_classes(r.phases[2].removed)).edges();
  const auto m0 = bounded_graph(Model::M0, max_value).edges();
  r.final_equals_m0 = last == m0;
  return r;
}

}  // namespace collatz
