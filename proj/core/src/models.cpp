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

#include "collatz/models.hpp"

#include <algorithm>
#include <ostream>

#include "collatz/errors.hpp"

namespace collatz {

std::vector<Move<BigInt>> successors(const BigInt& x, Model m) {
  std::vector<Move<BigInt>> out;
  if (m == Model::M2) throw DomainViolation("M2 successors are rational; pass a Rat");
  for (auto a : kActionOrder) {
    if (guard_allows(a, x, m)) out.push_back({a, apply(a, x, m)});
  }
  return out;
}

std::vector<Move<Rat>> successors(const Rat& x, Model m) {
  std::vector<Move<Rat>> out;
  for (auto a : kActionOrder) {
    if (guard_allows(a, x, m)) out.push_back({a, apply(a, x, m)});
  }
  return out;
}

std::vector<Move<BigInt>> predecessors(const BigInt& x, Model m) {
  if (m == Model::M2) throw DomainViolation("M2 predecessors are rational; pass a Rat");
  std::vector<Move<BigInt>> out;
  if (x < 1) return out;
  // T: y -> 3y + 1
  if (x % 3 == 1 && x > 1) {
    BigInt y = (x - 1) / 3;
    if (guard_allows(Action::T, y, m)) out.push_back({Action::T, std::move(y)});
  }
  // B: 2x -> x
  if (BigInt y = x << 1; guard_allows(Action::B, y, m)) out.push_back({Action::B, std::move(y)});
  // F: 3x + 1 -> x
  if (BigInt y = 3 * x + 1; guard_allows(Action::F, y, m)) {
    out.push_back({Action::F, std::move(y)});
  }
  // D: x / 2 -> x
  if (!boost::multiprecision::bit_test(x, 0)) {
    BigInt y = x >> 1;
    if (guard_allows(Action::D, y, m)) out.push_back({Action::D, std::move(y)});
  }
  return out;
}

std::vector<Move<Rat>> predecessors(const Rat& x, Model m) {
  if (m != Model::M2) {
    std::vector<Move<Rat>> out;
    if (!x.is_integer()) return out;
    for (auto& mv : predecessors(x.num(), m)) out.push_back({mv.action, Rat(mv.value)});
    return out;
  }
  std::vector<Move<Rat>> out;
  if (x.is_zero()) return out;
  const SignedRational& q = x.exact();
  if (q > 1) out.push_back({Action::T, Rat(SignedRational((q - 1) / 3))});
  out.push_back({Action::B, Rat(SignedRational(2 * q))});
  out.push_back({Action::F, Rat(SignedRational(3 * q + 1))});
  out.push_back({Action::D, Rat(SignedRational(q / 2))});
  return out;
}

EdgeClass classify_edge(const BigInt& x, Action a, Model m) {
  if (!guard_allows(a, x, m)) {
    throw IllegalEdge(std::string(1, to_char(a)) + " is not a legal move at " + x.str() + " in " +
                      std::string(to_string(m)));
  }
  if (a != Action::F) return EdgeClass::OTHER;
  const auto r = static_cast<unsigned>(x % 6);
  if (r == 1) return EdgeClass::E1;
  if (r == 4) return EdgeClass::E4;
  return EdgeClass::OTHER;
}

EdgeFilter all_edges() {
  return [](const Edge&) { return true; };
}

EdgeFilter drop_classes(std::vector<EdgeClass> classes) {
  return [classes = std::move(classes)](const Edge& e) {
    if (e.action != Action::F) return true;
    const EdgeClass c = e.from % 6 == 1   ? EdgeClass::E1
                        : e.from % 6 == 4 ? EdgeClass::E4
                                          : EdgeClass::OTHER;
    return std::find(classes.begin(), classes.end(), c) == classes.end();
  };
}

BoundedGraph::BoundedGraph(Model model, NodeId max_value, std::vector<std::uint64_t> offsets,
                           std::vector<Action> actions, std::vector<NodeId> targets)
    : model_(model),
      max_value_(max_value),
      offsets_(std::move(offsets)),
      actions_(std::move(actions)),
      targets_(std::move(targets)) {}

std::vector<BoundedGraph::OutEdge> BoundedGraph::out_edges(NodeId node) const {
  std::vector<OutEdge> out;
  if (node < 1 || node > max_value_) return out;
  for (auto i = offsets_[node]; i < offsets_[node + 1]; ++i) out.push_back({actions_[i], targets_[i]});
  return out;
}

std::span<const NodeId> BoundedGraph::targets(NodeId node) const {
  if (node < 1 || node > max_value_) return {};
  return std::span<const NodeId>(targets_).subspan(offsets_[node], offsets_[node + 1] - offsets_[node]);
}

bool BoundedGraph::has_edge(NodeId from, Action a, NodeId to) const {
  for (const auto& e : out_edges(from)) {
    if (e.action == a && e.to == to) return true;
  }
  return false;
}

std::vector<Edge> BoundedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(targets_.size());
  for (NodeId v = 1; v <= max_value_; ++v) {
    for (auto i = offsets_[v]; i < offsets_[v + 1]; ++i) out.push_back({v, actions_[i], targets_[i]});
  }
  return out;
}

std::vector<std::vector<NodeId>> BoundedGraph::transpose() const {
  std::vector<std::vector<NodeId>> in(max_value_ + 1);
  for (NodeId v = 1; v <= max_value_; ++v) {
    for (auto i = offsets_[v]; i < offsets_[v + 1]; ++i) in[targets_[i]].push_back(v);
  }
  return in;
}

BoundedGraph bounded_graph(Model m, NodeId max_value, const EdgeFilter& filter) {
  if (m == Model::M2) throw DomainViolation("M2 has rational nodes and is not materialized");
  if (max_value < 1) throw DomainViolation("bounded graph needs max_value >= 1");
  std::vector<std::uint64_t> offsets(max_value + 2, 0);
  std::vector<Action> actions;
  std::vector<NodeId> targets;
  actions.reserve(max_value + max_value / 2);
  targets.reserve(max_value + max_value / 2);
  const BigInt bound = max_value;
  for (NodeId v = 1; v <= max_value; ++v) {
    offsets[v] = targets.size();
    for (const auto& mv : successors(BigInt(v), m)) {
      if (mv.value > bound) continue;
      const Edge e{v, mv.action, mv.value.convert_to<NodeId>()};
      if (!filter(e)) continue;
      actions.push_back(e.action);
      targets.push_back(e.to);
    }
  }
  offsets[max_value + 1] = targets.size();
  return BoundedGraph(m, max_value, std::move(offsets), std::move(actions), std::move(targets));
}

void write_dot(std::ostream& out, const BoundedGraph& graph) {
  out << "digraph " << to_string(graph.model()) << " {\n";
  for (NodeId v = 1; v <= graph.max_value(); ++v) out << "  " << v << " [label=\"" << v << "\"];\n";
  for (const auto& e : graph.edges()) {
    out << "  " << e.from << " -> " << e.to << " [label=\"" << to_char(e.action) << "\"";
    if (e.action == Action::F) out << ", color=\"red\"";
    out << "];\n";
  }
  out << "}\n";
}

}  // namespace collatz
