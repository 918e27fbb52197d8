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

#include "collatz/catalog.hpp"

#include <algorithm>

#include "collatz/errors.hpp"

namespace collatz {

namespace {

bool parity_ok(Parity p, const BigInt& v) {
  if (p == Parity::any) return true;
  const bool even = !boost::multiprecision::bit_test(v, 0);
  return (p == Parity::even) == even;
}

ProofStep act(std::string_view word, std::string_view checkpoint) {
  ProofStep s;
  s.kind = ProofStep::Kind::actions;
  s.actions = ActionSeq::parse(word);
  s.checkpoint = ValueTemplate::parse(checkpoint);
  return s;
}

ProofStep lemma(std::string_view id, std::string_view checkpoint) {
  ProofStep s;
  s.kind = ProofStep::Kind::lemma;
  s.lemma = std::string(id);
  s.checkpoint = ValueTemplate::parse(checkpoint);
  return s;
}

ProofStep search(std::string_view checkpoint) {
  ProofStep s;
  s.kind = ProofStep::Kind::search;
  s.checkpoint = ValueTemplate::parse(checkpoint);
  return s;
}

Precondition when(Parity parity, std::optional<unsigned> last = std::nullopt,
                  Parity r_parity = Parity::any) {
  return Precondition{parity, last, r_parity};
}

ClaimSpec scripted(std::string id, std::string statement, std::string_view in,
                   std::vector<ProofStep> steps, std::string_view out, Precondition pre = {}) {
  ClaimSpec c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  c.kind = ClaimKind::scripted;
  c.model = Model::M1;
  c.pre = pre;
  c.input = ValueTemplate::parse(in);
  c.expected = ValueTemplate::parse(out);
  c.steps = std::move(steps);
  c.indexed = c.input->uses_n() || c.expected->uses_n();
  return c;
}

ClaimSpec inverse_of(std::string id, std::string statement, std::string base,
                     std::string_view stated = {}) {
  ClaimSpec c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  c.kind = ClaimKind::inverse;
  c.base = std::move(base);
  if (!stated.empty()) c.stated = ActionSeq::parse(stated);
  return c;
}

ClaimSpec dispatch(std::string id, std::string statement, std::vector<DispatchCase> cases,
                   bool indexed = false) {
  ClaimSpec c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  c.kind = ClaimKind::dispatch;
  c.cases = std::move(cases);
  c.indexed = indexed;
  return c;
}

ClaimSpec succession(std::string id, std::string_view word, int offset) {
  ClaimSpec c;
  c.id = std::move(id);
  c.kind = ClaimKind::succession;
  c.model = Model::M2;
  c.sequence = ActionSeq::parse(word);
  c.offset = offset;
  c.statement = std::string(word) + " maps x to x " + (offset > 0 ? "+ " : "- ") +
                std::to_string(std::abs(offset)) + " for every rational x";
  return c;
}

ClaimSpec simple(std::string id, std::string statement, ClaimKind kind, Model m,
                 Precondition pre = {}) {
  ClaimSpec c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  c.kind = kind;
  c.model = m;
  c.pre = pre;
  return c;
}

ClaimSpec reach(std::string id, std::string statement, Model m, std::string_view target) {
  ClaimSpec c = simple(std::move(id), std::move(statement), ClaimKind::reach, m);
  c.input = ValueTemplate::parse("A");
  c.expected = ValueTemplate::parse(target);
  return c;
}

ClaimSpec cluster(std::string id, std::string statement, ClusterShape shape) {
  ClaimSpec c = simple(std::move(id), std::move(statement), ClaimKind::cluster, Model::M1);
  c.shape = shape;
  return c;
}

std::vector<ClaimSpec> build() {
  std::vector<ClaimSpec> v;

  v.push_back(succession("T.succ1", "TDDFFBBT", 1));
  v.push_back(succession("T.succ2", "DFFBTT", 2));
  v.push_back(succession("T.succ3", "DDFFBBTT", 3));
  v.push_back(succession("T.succ4", "TDDFDDFFBBBBTT", 4));
  v.push_back(succession("T.prec1", "FDDTTBBF", -1));
  v.push_back(succession("T.prec2", "FFDTTB", -2));
  v.push_back(succession("T.prec3", "FFDDTTBB", -3));
  v.push_back(succession("T.prec4", "FFDDDDTTBBTBBF", -4));
  v.push_back(simple("L3.m2-reach", "every positive integer reaches 1 in the rational model",
                     ClaimKind::m2_reach, Model::M2));

  // Four ternary endings rewritten to 11.
  v.push_back(scripted("L4.10-11", "A10 => A11 by TDDFFBBT", "A10",
                       {act("T", "A101"), act("D", "A^D 202"), act("D", "(A^DD+1)111"),
                        act("F", "(A^DD+1)11"), act("F", "(A^DD+1)1"), act("B", "A^D 2"),
                        act("B", "A1"), act("T", "A11")},
                       "A11"));
  v.push_back(inverse_of("L4.11-10", "A11 => A10 by FDDTTBBF", "L4.10-11", "FDDTTBBF"));
  v.push_back(scripted("L4.02-11", "A02 => A11 by DFFBTT", "A02",
                       {act("D", "A^D 11"), act("F", "A^D 1"), act("F", "A^D"), act("B", "A"),
                        act("T", "A1"), act("T", "A11")},
                       "A11"));
  v.push_back(inverse_of("L4.11-02", "A11 => A02 by FFDTTB", "L4.02-11", "FFDTTB"));
  v.push_back(scripted("L4.01-11", "A01 => A11 by DDFFBBTT", "A01",
                       {act("D", "A^D 02"), act("D", "A^DD 11"), act("F", "A^DD 1"),
                        act("F", "A^DD"), act("B", "A^D"), act("B", "A"), act("T", "A1"),
                        act("T", "A11")},
                       "A11"));
  v.push_back(inverse_of("L4.11-01", "A11 => A01 by FFDDTTBB", "L4.01-11", "FFDDTTBB"));
  v.push_back(scripted("L4.00-11", "A00 => A11 by TDDFDDFFBBBBTT", "A00",
                       {act("T", "A001"), act("D", "A^D 002"), act("D", "A^DD 011"),
                        act("F", "A^DD 01"), act("D", "A^DDD 02"), act("D", "A^DDDD 11"),
                        act("F", "A^DDDD 1"), act("F", "A^DDDD"), act("BB", "A^DD"),
                        act("B", "A^D"), act("B", "A"), act("T", "A1"), act("T", "A11")},
                       "A11"));
  v.push_back(inverse_of("L4.11-00", "A11 => A00 by FFDDDDTTBBTBBF", "L4.00-11", "FFDDDDTTBBTBBF"));
  v.push_back(cluster("T.5cluster", "9k..9k+4 are mutually reachable in M1", ClusterShape::five));
  {
    ClaimSpec c = scripted("T.5attach", "TT sends any A to A11, a member of a five-cluster", "A",
                           {act("T", "A1"), act("T", "A11")}, "A11");
    c.lands_in = ClusterKind::five;
    v.push_back(std::move(c));
  }

  v.push_back(scripted("L4.20-21", "A20 => A21 by TDDFFBBT", "A20",
                       {act("T", "A201"), act("D", "(A^D+1)102"), act("D", "((A^D+1)^D)211"),
                        act("F", "(A^D+1)^D 21"), act("F", "(A^D+1)^D 2"), act("B", "(A^D+1)1"),
                        act("B", "A2"), act("T", "A21")},
                       "A21"));
  v.push_back(inverse_of("L4.21-20", "A21 => A20 by FDDTTBBF", "L4.20-21", "FDDTTBBF"));
  v.push_back(scripted("L4.12-21", "A12 => A21 by DDDFFBBTBT", "A12",
                       {act("D", "(A^D+1)01"), act("D", "(A^D+1)^D 02"),
                        act("D", "(A^D+1)^DD 11"), act("F", "(A^D+1)^DD 1"),
                        act("F", "(A^D+1)^DD"), act("B", "(A^D+1)^D"), act("B", "(A^D+1)"),
                        act("T", "(A^D+1)1"), act("B", "A2"), act("T", "A21")},
                       "A21"));
  v.push_back(inverse_of("L4.21-12", "A21 => A12 by FDFDDTTBBB", "L4.12-21", "FDFDDTTBBB"));
  v.push_back(cluster("T.3cluster", "9k+5..9k+7 are mutually reachable in M1", ClusterShape::three));

  // A21 => A11, split on the parity and last digit of A = R d.
  v.push_back(scripted("L4.even.21-11", "A21 => A11 for even A", "A21",
                       {act("T", "A211"), act("B", "A_1 102"), lemma("L4.02-11", "A_1 111"),
                        act("FFF", "A_1"), act("DTT", "A11")},
                       "A11", when(Parity::even)));
  v.push_back(inverse_of("L4.even.11-21", "A11 => A21 for even A", "L4.even.21-11"));
  v.push_back(scripted("L4.R0.21-11", "R021 => R011 for odd A = R0", "A21",
                       {act("D", "R^D 112"), act("TT", "R^D 11211"), act("B", "R02102"),
                        lemma("L4.02-11", "R02111"), act("FFF", "R02"), lemma("L4.02-11", "R11"),
                        lemma("L4.11-01", "R01"), act("T", "R011")},
                       "A11", when(Parity::odd, 0)));
  v.push_back(inverse_of("L4.R0.11-21", "R011 => R021 for odd A = R0", "L4.R0.21-11"));
  v.push_back(scripted("L4.R1.21-11", "R121 => R111 for odd A = R1", "A21",
                       {lemma("L4.21-12", "R112"), act("TT", "R11211"), act("B", "R_1 02102"),
                        lemma("L4.02-11", "R_1 02111"), act("FFF", "R_1 02"), act("D", "R11"),
                        act("T", "R111")},
                       "A11", when(Parity::odd, 1)));
  v.push_back(inverse_of("L4.R1.11-21", "R111 => R121 for odd A = R1", "L4.R1.21-11"));

  v.push_back(scripted("L4.even.22-11", "A22 => A11 for even A", "A22",
                       {act("B", "A_1 11"), act("FFDTT", "A11")}, "A11", when(Parity::even)));
  v.push_back(inverse_of("L4.even.11-22", "A11 => A22 for even A", "L4.even.22-11"));
  v.push_back(scripted("L4.R0.22-11", "R022 => R011 for odd A = R0", "A22",
                       {act("D", "R^D 121"), lemma("L4.21-12", "R^D 112"), act("B", "R021"),
                        act("F", "R02"), lemma("L4.02-11", "R11"), lemma("L4.11-01", "R01"),
                        act("T", "R011")},
                       "A11", when(Parity::odd, 0)));
  v.push_back(inverse_of("L4.R0.11-22", "R011 => R022 for odd A = R0", "L4.R0.22-11"));
  v.push_back(scripted("L4.R1.22-11", "R122 => R111 for odd A = R1", "A22",
                       {search("R_1 011"), search("R_1 01"), search("R02"), search("R11"),
                        search("R111")},
                       "A11", when(Parity::odd, 1)));
  v.push_back(inverse_of("L4.R1.11-22", "R111 => R122 for odd A = R1", "L4.R1.22-11"));

  // Appending a 2 to a run of trailing 2s.
  v.push_back(scripted("L4.R0.2app", "R0 2^n => R0 2^(n+1)", "A 2{n}",
                       {search("A 2{n} 1"), search("R^D 1 2{n-1} 12"), search("R^D 1 2{n-1} 21"),
                        search("R0 2{n-1} 22"), search("A 2{n+1}")},
                       "A 2{n+1}", when(Parity::any, 0)));
  v.push_back(inverse_of("L4.R0.2bs", "R0 2^(n+1) => R0 2^n", "L4.R0.2app"));
  v.push_back(scripted("L4.R1.2app.even", "R1 2^n => R1 2^(n+1) for even R", "A 2{n}",
                       {search("A 2{n} 1"), search("R_1 0 2{n} 2"), search("R_1 0 2{n} 21"),
                        search("R_1 0 2{n} 12"), search("R1 2{n} 21"), search("R1 2{n+1}")},
                       "A 2{n+1}", when(Parity::any, 1, Parity::even)));
  v.push_back(scripted("L4.R1.2app.odd", "(P+1)1 2^n => (P+1)1 2^(n+1) for odd R = P+1",
                       "A 2{n}",
                       {search("P_1 2 1{n}"), search("P_1 2 1{n+1}"), search("(P+1)1 2{n+1}")},
                       "A 2{n+1}", when(Parity::any, 1, Parity::odd)));
  v.push_back(dispatch("L4.R1.2app", "R1 2^n => R1 2^(n+1)",
                       {{when(Parity::any, 1, Parity::even), "L4.R1.2app.even"},
                        {when(Parity::any, 1, Parity::odd), "L4.R1.2app.odd"}},
                       true));
  v.back().pre = when(Parity::any, 1);
  v.push_back(inverse_of("L4.R1.2bs", "R1 2^(n+1) => R1 2^n", "L4.R1.2app"));
  {
    ClaimSpec c = simple("T.2app", "A 2^n => A 2^(n+1) for every A", ClaimKind::append_reduction,
                         Model::M1);
    c.cases = {{when(Parity::any, 0), "L4.R0.2app"}, {when(Parity::any, 1), "L4.R1.2app"}};
    c.indexed = true;
    v.push_back(std::move(c));
  }
  v.push_back(inverse_of("T.2bs", "A 2^(n+1) => A 2^n for every A", "T.2app"));

  v.push_back(scripted("L4.R2.22-11", "R222 => R211 for odd A = R2", "A22",
                       {search("A"), act("TT", "A11")}, "A11", when(Parity::odd, 2)));
  v.push_back(dispatch("T.22-11", "A22 => A11 for every A",
                       {{when(Parity::even), "L4.even.22-11"},
                        {when(Parity::odd, 0), "L4.R0.22-11"},
                        {when(Parity::odd, 1), "L4.R1.22-11"},
                        {when(Parity::odd, 2), "L4.R2.22-11"}}));
  v.push_back(inverse_of("L4.11-22", "A11 => A22 for every A", "T.22-11"));
  v.push_back(scripted("L4.R2.21-11", "R221 => R211 for odd A = R2", "A21",
                       {search("A 2"), search("A"), search("A11")}, "A11", when(Parity::odd, 2)));
  v.push_back(dispatch("T.21-11", "A21 => A11 for every A",
                       {{when(Parity::even), "L4.even.21-11"},
                        {when(Parity::odd, 0), "L4.R0.21-11"},
                        {when(Parity::odd, 1), "L4.R1.21-11"},
                        {when(Parity::odd, 2), "L4.R2.21-11"}}));
  v.push_back(inverse_of("L4.11-21", "A11 => A21 for every A", "T.21-11"));

  v.push_back(cluster("T.9cluster", "9k..9k+8 are mutually reachable in M1", ClusterShape::nine));
  v.push_back(reach("T.A-11", "every A reaches 11 (= 4) in M1", Model::M1, "11"));
  v.push_back(simple("L4.m1-desc", "every A > 1 reaches a smaller value in M1",
                     ClaimKind::descending, Model::M1));
  v.push_back(reach("L4.m1-reach", "every A reaches 1 in M1", Model::M1, "1"));
  v.push_back(simple("T.node-loop", "every A lies on a closed walk in M1", ClaimKind::node_loop,
                     Model::M1));

  v.push_back(simple("L5.desc-2", "A ending in 2 reaches a smaller value in MS",
                     ClaimKind::descending, Model::MS, when(Parity::any, 2)));
  v.push_back(simple("L5.desc-1", "A ending in 1 reaches a smaller value in MS",
                     ClaimKind::descending, Model::MS, when(Parity::any, 1)));
  v.push_back(simple("L5.desc-0", "A ending in 0 reaches a smaller value in MS",
                     ClaimKind::descending, Model::MS, when(Parity::any, 0)));
  v.push_back(simple("T.descending", "every A > 1 reaches a smaller value in MS",
                     ClaimKind::descending, Model::MS));
  v.push_back(simple("T.edge-loop", "for even A a directed MS walk A => 3A+1 closes the F edge",
                     ClaimKind::edge_loop, Model::MS, when(Parity::even)));
  v.push_back(reach("L5.ms-reach", "every A reaches 1 in MS", Model::MS, "1"));
  v.push_back(simple("T.deloop", "removing E1 then E4 F edges keeps 1 reachable from every A",
                     ClaimKind::deloop, Model::MS));

  v.push_back(simple("L6.collatz", "the standard trajectory of every A reaches 1",
                     ClaimKind::m0_orbit, Model::M0));
  v.push_back(simple("T.unique-cycle", "the only M0 cycle is 1 -> 4 -> 2 -> 1",
                     ClaimKind::cycle_census, Model::M0));

  // Inverse and dispatch claims run under their cases' model.
  for (auto& c : v) {
    if (c.kind == ClaimKind::inverse || c.kind == ClaimKind::dispatch) c.model = Model::M1;
    if (c.kind == ClaimKind::inverse) {
      const auto base = std::find_if(v.begin(), v.end(), [&](const ClaimSpec& b) { return b.id == c.base; });
      if (base != v.end()) {
        c.pre = base->pre;
        c.indexed = base->indexed;
      }
    }
  }
  return v;
}

}  // namespace

bool Precondition::holds(const BigInt& a) const {
  if (!parity_ok(parity, a)) return false;
  if (last_digit && static_cast<unsigned>(a % 3) != *last_digit) return false;
  return parity_ok(r_parity, a / 3);
}

std::string Precondition::str() const {
  std::vector<std::string> parts;
  if (parity != Parity::any) parts.push_back(parity == Parity::even ? "A even" : "A odd");
  if (last_digit) parts.push_back("last digit " + std::to_string(*last_digit));
  if (r_parity != Parity::any) parts.push_back(r_parity == Parity::even ? "R even" : "R odd");
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += ", ";
    s += p;
  }
  return s;
}

const std::vector<ClaimSpec>& catalog() {
  static const std::vector<ClaimSpec> claims = build();
  return claims;
}

const ClaimSpec& find_claim(std::string_view id) {
  for (const auto& c : catalog()) {
    if (c.id == id) return c;
  }
  std::string msg = "unknown claim '" + std::string(id) + "'; known ids:";
  for (const auto& c : catalog()) msg += " " + c.id;
  throw UnknownClaim(msg);
}

std::vector<std::string> claim_ids() {
  std::vector<std::string> ids;
  for (const auto& c : catalog()) ids.push_back(c.id);
  return ids;
}

std::optional<ActionSeq> fixed_script(const ClaimSpec& spec) {
  if (spec.kind == ClaimKind::inverse) {
    auto fwd = fixed_script(find_claim(spec.base));
    if (!fwd) return std::nullopt;
    return fwd->inverse();
  }
  if (spec.kind != ClaimKind::scripted || !spec.pre.trivial() || spec.indexed) return std::nullopt;
  ActionSeq word;
  for (const auto& s : spec.steps) {
    if (s.kind != ProofStep::Kind::actions) return std::nullopt;
    word.append(s.actions);
  }
  return word;
}

std::string_view to_string(ClaimKind k) noexcept {
  switch (k) {
    case ClaimKind::succession: return "succession";
    case ClaimKind::m2_reach: return "m2_reach";
    case ClaimKind::scripted: return "scripted";
    case ClaimKind::inverse: return "inverse";
    case ClaimKind::dispatch: return "dispatch";
    case ClaimKind::append_reduction: return "append_reduction";
    case ClaimKind::cluster: return "cluster";
    case ClaimKind::reach: return "reach";
    case ClaimKind::descending: return "descending";
    case ClaimKind::edge_loop: return "edge_loop";
    case ClaimKind::node_loop: return "node_loop";
    case ClaimKind::deloop: return "deloop";
    case ClaimKind::m0_orbit: return "m0_orbit";
    case ClaimKind::cycle_census: return "cycle_census";
  }
  return "?";
}

std::string_view to_string(ClusterShape s) noexcept {
  switch (s) {
    case ClusterShape::five: return "five";
    case ClusterShape::three: return "three";
    case ClusterShape::nine: return "nine";
  }
  return "?";
}

}  // namespace collatz
