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

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "collatz/actions.hpp"
#include "collatz/model.hpp"
#include "collatz/numeral.hpp"

namespace collatz {

template <typename V>
struct Move {
  Action action;
  V value;

  friend bool operator==(const Move&, const Move&) = default;
};

/// Guard-legal moves out of x, in T, B, F, D order.
std::vector<Move<BigInt>> successors(const BigInt& x, Model m);
std::vector<Move<Rat>> successors(const Rat& x, Model m);

/// Every (a, y) with (a, x) in successors(y): the move a leads from y to x.
/// Same T, B, F, D order.
std::vector<Move<BigInt>> predecessors(const BigInt& x, Model m);
std::vector<Move<Rat>> predecessors(const Rat& x, Model m);

/// F-edges split by the residue of their source mod 6. Removing E1 and then
/// E4 from MS leaves M0.
enum class EdgeClass { E1, E4, OTHER };

constexpr std::string_view to_string(EdgeClass c) noexcept {
  switch (c) {
    case EdgeClass::E1: return "E1";
    case EdgeClass::E4: return "E4";
    case EdgeClass::OTHER: return "OTHER";
  }
  return "?";
}

/// Throws IllegalEdge if `a` is not a legal move at x.
EdgeClass classify_edge(const BigInt& x, Action a, Model m);

using NodeId = std::uint64_t;

struct Edge {
  NodeId from;
  Action action;
  NodeId to;

  friend bool operator==(const Edge&, const Edge&) = default;
};

using EdgeFilter = std::function<bool(const Edge&)>;

/// Keeps every edge.
EdgeFilter all_edges();
/// Drops F-edges whose source falls in any of the given classes.
EdgeFilter drop_classes(std::vector<EdgeClass> classes);

/// An integer model materialized over nodes 1..max_value. Edges whose target
/// exceeds the bound are dropped, never clamped. Stored as CSR: out-edges of
/// each node in T, B, F, D order. Immutable after construction.
class BoundedGraph {
 public:
  BoundedGraph(Model model, NodeId max_value, std::vector<std::uint64_t> offsets,
               std::vector<Action> actions, std::vector<NodeId> targets);

  Model model() const noexcept { return model_; }
  NodeId max_value() const noexcept { return max_value_; }
  std::size_t edge_count() const noexcept { return targets_.size(); }

  struct OutEdge {
    Action action;
    NodeId to;
  };

  /// Out-edges of `node` (1-based).
  std::vector<OutEdge> out_edges(NodeId node) const;
  std::span<const NodeId> targets(NodeId node) const;
  bool has_edge(NodeId from, Action a, NodeId to) const;

  /// Every edge, sorted by source then action order.
  std::vector<Edge> edges() const;

  /// Reverse adjacency: for each node the sources of its in-edges, ascending.
  std::vector<std::vector<NodeId>> transpose() const;

 private:
  Model model_;
  NodeId max_value_;
  std::vector<std::uint64_t> offsets_;  // size max_value + 2, index by node
  std::vector<Action> actions_;
  std::vector<NodeId> targets_;
};

/// Throws DomainViolation for M2 (rational nodes are not materialized) or
/// max_value < 1.
BoundedGraph bounded_graph(Model m, NodeId max_value, const EdgeFilter& filter = all_edges());

/// One digraph, nodes labelled by decimal value, edges labelled by action
/// letter. F-edges are drawn red. Emission order is ascending node, then
/// action order.
void write_dot(std::ostream& out, const BoundedGraph& graph);

}  // namespace collatz
