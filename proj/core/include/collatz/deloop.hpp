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
#include <cstddef>
#include <string>
#include <vector>

#include "collatz/models.hpp"

namespace collatz {

/// Marks every node in 1..cap that has a walk to 1 in the model restricted
/// to nodes <= cap and to edges the filter keeps. Index 0 is unused.
std::vector<bool> reaches_one(Model m, NodeId cap, const EdgeFilter& filter = all_edges());

struct DeloopPhase {
  std::string name;
  std::vector<EdgeClass> removed;
  /// Edges among 1..max_value kept in this phase.
  std::size_t edges = 0;
  /// Nodes in 1..max_value with no walk to 1 below the search cap.
  std::vector<NodeId> unreached;
};

struct DeloopResult {
  NodeId max_value = 0;
  NodeId cap = 0;
  std::array<DeloopPhase, 3> phases;
  /// The last phase keeps exactly the M0 edges.
  bool final_equals_m0 = false;
};

/// Phase 1 is MS, phase 2 drops E1 edges, phase 3 also drops E4 edges.
/// Searches run below max_value * 2^headroom_shift.
DeloopResult delooping_experiment(NodeId max_value, unsigned headroom_shift = 10);

}  // namespace collatz
