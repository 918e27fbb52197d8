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
#include <vector>

#include "collatz/models.hpp"

namespace collatz {

/// Strongly connected components of a bounded graph, each sorted, listed
/// by smallest member. Nodes are 1..max_value.
std::vector<std::vector<NodeId>> strongly_connected_components(const BoundedGraph& g);

struct CensusResult {
  Model model = Model::M0;
  NodeId max_value = 0;
  /// Elementary cycles, each rotated to start at its smallest node, in
  /// lexicographic order.
  std::vector<std::vector<NodeId>> cycles;
  bool truncated = false;
};

/// Every elementary cycle of the bounded graph, up to max_cycles.
CensusResult cycle_census(const BoundedGraph& g, std::size_t max_cycles = 100000);
CensusResult cycle_census(Model m, NodeId max_value, std::size_t max_cycles = 100000);

}  // namespace collatz
