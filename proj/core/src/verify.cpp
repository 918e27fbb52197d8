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

#include "collatz/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <map>

#include "collatz/census.hpp"
#include "collatz/deloop.hpp"
#include "collatz/errors.hpp"
#include "collatz/parallel.hpp"

namespace collatz {

SearchBounds VerifyOptions::bounds_for(const BigInt& from) const {
  SearchBounds b;
  b.max_value = from << value_shift;
  b.max_depth = max_depth;
  b.max_states = max_states;
  return b;
}

nlohmann::json VerifyOptions::to_json() const {
  return {
      {"max_value", "input * 2^" + std::to_string(value_shift)},
      {"max_depth", max_depth},
      {"max_states", max_states},
      {"cluster_bound", cluster_bound.str()},
      {"append_depth", append_depth},
      {"headroom", "max * 2^" + std::to_string(headroom_shift)},
      {"trajectory_cap", trajectory_cap},
  };
}

namespace {

std::string label(const BigInt& a, int n) {
  return n > 0 ? "A=" + a.str() + ", n=" + std::to_string(n) : a.str();
}

InstanceResult passed(std::vector<Trace> witnesses = {}, std::string note = {}) {
  InstanceResult r;
  r.verdict = Verdict::pass;
  r.witnesses = std::move(witnesses);
  r.note = std::move(note);
  return r;
}

InstanceResult skipped(std::string note) {
  InstanceResult r;
  r.verdict = Verdict::skipped;
  r.note = std::move(note);
  return r;
}

InstanceResult failed(std::string input, std::string reason,
                      std::optional<std::size_t> step = std::nullopt,
                      std::optional<Trace> trace = std::nullopt) {
  InstanceResult r;
  r.verdict = Verdict::fail;
  r.failure = Failure{std::move(input), step, std::move(reason), std::move(trace)};
  return r;
}

void extend(Trace& trace, const Trace& part) {
  trace.steps.insert(trace.steps.end(), part.steps.begin(), part.steps.end());
}

std::optional<std::size_t> last_index(const Trace& t) {
  if (t.steps.empty()) return std::nullopt;
  return t.steps.size() - 1;
}

std::string search_failure(const BigInt& from, const BigInt& to, const ReachResult& r) {
  return "no walk " + from.str() + " => " + to.str() + " (" + std::string(to_string(r.status)) +
         " after " + std::to_string(r.states) + " states)";
}

InstanceResult run(const ClaimSpec& c, const BigInt& a, int n, const VerifyOptions& o);

InstanceResult run_scripted(const ClaimSpec& c, const BigInt& a, int n, const VerifyOptions& o) {
  const std::string in = label(a, n);
  const auto ctx = TemplateContext::for_parameter(a, n);
  Trace w;
  w.model = c.model;
  w.start = c.input->eval(ctx);
  if (w.start < 1) return skipped("input is not a positive integer");

  for (std::size_t k = 0; k < c.steps.size(); ++k) {
    const ProofStep& s = c.steps[k];
    const std::string where = "proof step " + std::to_string(k + 1);
    std::optional<BigInt> target;
    if (s.checkpoint) target = s.checkpoint->eval(ctx);

    std::optional<ActionSeq> word;
    if (s.kind == ProofStep::Kind::actions) {
      word = s.actions;
    } else if (s.kind == ProofStep::Kind::lemma) {
      word = fixed_script(find_claim(s.lemma));
    }
    if (word) {
      const std::size_t base = w.steps.size();
      auto out = try_apply_seq(*word, w.end(), c.model);
      extend(w, out.trace);
      if (out.failure) {
        return failed(in, where + ": " + out.failure->reason, base + out.failure->step_index, w);
      }
    } else {
      if (!target) throw Error(c.id + " " + where + " searches without a checkpoint");
      const BigInt from = w.end();
      const auto r = bfs_reach(c.model, from, *target, o.bounds_for(std::max(from, *target)));
      if (!r.found()) return failed(in, where + ": " + search_failure(from, *target, r), w.steps.size(), w);
      extend(w, r.path->to_trace());
    }
    if (target && w.end() != *target) {
      return failed(in,
                    where + ": reached " + w.end().str() + ", expected " + s.checkpoint->text() +
                        " = " + target->str(),
                    last_index(w), w);
    }
  }
  const BigInt expected = c.expected->eval(ctx);
  if (w.end() != expected) {
    return failed(in,
                  "reached " + w.end().str() + ", expected " + c.expected->text() + " = " +
                      expected.str(),
                  last_index(w), w);
  }
  if (c.lands_in && cluster_decompose(w.end()).kind() != *c.lands_in) {
    return failed(in, "result " + w.end().str() + " is outside the expected cluster", last_index(w), w);
  }
  return passed({std::move(w)});
}

InstanceResult run_inverse(const ClaimSpec& c, const BigInt& a, int n, const VerifyOptions& o) {
  const std::string in = label(a, n);
  const ClaimSpec& base = find_claim(c.base);
  if (c.stated) {
    const auto fwd = fixed_script(base);
    if (fwd && *c.stated != fwd->inverse()) {
      return failed(in, "stated word " + c.stated->str() + " is not the inverse of " + fwd->str());
    }
  }
  InstanceResult fwd = run(base, a, n, o);
  if (fwd.verdict == Verdict::skipped) return fwd;
  if (fwd.verdict == Verdict::fail) {
    return failed(in, "forward claim " + base.id + " failed: " + fwd.failure->reason);
  }
  const Trace& w = fwd.witnesses.back();
  auto out = try_apply_seq(w.actions().inverse(), w.end(), c.model);
  if (out.failure) {
    return failed(in, "inverse replay: " + out.failure->reason, out.failure->step_index, out.trace);
  }
  if (out.trace.end() != w.start) {
    return failed(in, "inverse replay ends at " + out.trace.end().str() + ", not " + w.start.str(),
                  last_index(out.trace), out.trace);
  }
  return passed({std::move(out.trace)});
}

InstanceResult run_dispatch(const ClaimSpec& c, const BigInt& a, int n, const VerifyOptions& o) {
  for (const auto& cs : c.cases) {
    if (cs.when.holds(a)) return run(find_claim(cs.claim), a, n, o);
  }
  return failed(label(a, n), "no case of " + c.id + " covers this parameter");
}

InstanceResult run_append(const ClaimSpec& c, const BigInt& a, int n, const VerifyOptions& o) {
  BigInt q = a;
  int m = 0;
  while (q % 3 == 2) {
    q /= 3;
    ++m;
  }
  BigInt input = a;
  for (int i = 0; i < n; ++i) input = 3 * input + 2;
  for (const auto& cs : c.cases) {
    if (!cs.when.holds(q)) continue;
    InstanceResult r = run(find_claim(cs.claim), q, n + m, o);
    if (r.verdict != Verdict::pass) {
      if (r.failure) r.failure->input = label(a, n);
      if (r.failure) r.failure->reason = "via " + cs.claim + " at " + label(q, n + m) + ": " + r.failure->reason;
      return r;
    }
    const Trace& w = r.witnesses.back();
    if (w.start != input || w.end() != 3 * input + 2) {
      return failed(label(a, n), "reduced instance does not match A 2^n", std::nullopt, w);
    }
    return r;
  }
  return failed(label(a, n), "no case covers the reduced parameter " + q.str());
}

InstanceResult run_succession(const ClaimSpec& c, const BigInt& a) {
  std::string note;
  const SignedRational xs[] = {SignedRational(a), SignedRational(-a), SignedRational(a, 7)};
  for (const auto& x : xs) {
    std::vector<SignedRational> values;
    const SignedRational y = evaluate_identity(c.sequence, x, &values);
    if (y != x + c.offset) {
      return failed(a.str(), "x = " + x.str() + " maps to " + y.str() + ", not " + SignedRational(x + c.offset).str());
    }
    if (x == SignedRational(a)) {
      for (const auto& v : values) {
        if (v <= 0) {
          note = "nonpositive intermediate";
          break;
        }
      }
    }
  }
  return passed({}, note);
}

InstanceResult run_m2_reach(const BigInt& a) {
  static const ActionSeq down4 = ActionSeq::parse("FFDDDDTTBBTBBF");
  static const ActionSeq down1 = ActionSeq::parse("FDDTTBBF");
  Rat x(a);
  std::size_t steps = 0;
  while (x != Rat(BigInt(1))) {
    const ActionSeq& word = x > Rat(BigInt(4)) ? down4 : down1;
    auto out = try_apply_seq(word, x, Model::M2);
    if (out.failure) return failed(a.str(), "at " + x.str() + ": " + out.failure->reason, steps + out.failure->step_index);
    steps += word.size();
    x = out.trace.end();
  }
  return passed();
}

std::vector<BigInt> cluster_members(ClusterShape shape, const BigInt& k) {
  const BigInt base = 9 * k;
  unsigned lo = 0, hi = 8;
  if (shape == ClusterShape::five) hi = 4;
  if (shape == ClusterShape::three) lo = 5, hi = 7;
  std::vector<BigInt> out;
  for (unsigned r = lo; r <= hi; ++r) {
    if (base + r >= 1) out.push_back(base + r);
  }
  return out;
}

InstanceResult run_cluster(const ClaimSpec& c, const BigInt& k, const VerifyOptions& o) {
  const auto members = cluster_members(c.shape, k);
  SearchBounds b;
  b.max_value = o.cluster_bound;
  b.max_depth = o.max_depth;
  b.max_states = o.max_states;
  std::vector<Trace> witnesses;
  const BigInt& hub = members.front();
  for (std::size_t i = 1; i < members.size(); ++i) {
    for (const auto& [from, to] : {std::pair{hub, members[i]}, std::pair{members[i], hub}}) {
      const auto r = bfs_reach(c.model, from, to, b);
      if (!r.found()) return failed("k=" + k.str(), search_failure(from, to, r) + " below " + b.max_value.str());
      witnesses.push_back(r.path->to_trace());
    }
  }
  return passed(std::move(witnesses));
}

InstanceResult run_reach(const ClaimSpec& c, const BigInt& a, const VerifyOptions& o) {
  const BigInt target = c.expected->eval(TemplateContext::for_parameter(a));
  const auto r = bfs_reach(c.model, a, target, o.bounds_for(std::max(a, target)));
  if (!r.found()) return failed(a.str(), search_failure(a, target, r));
  return passed({r.path->to_trace()});
}

InstanceResult run_descending(const ClaimSpec& c, const BigInt& a, const VerifyOptions& o) {
  if (a == 1) return skipped("no smaller positive integer");
  const auto r = bfs_find(c.model, a, [&](const BigInt& v) { return v < a; }, o.bounds_for(a));
  if (!r.found()) {
    return failed(a.str(), "no walk to a smaller value (" + std::string(to_string(r.status)) + " after " +
                               std::to_string(r.states) + " states)");
  }
  return passed({r.path->to_trace()});
}

InstanceResult run_edge_loop(const ClaimSpec& c, const BigInt& a, const VerifyOptions& o) {
  const BigInt target = 3 * a + 1;
  const auto r = bfs_reach(c.model, a, target, o.bounds_for(target));
  if (!r.found()) return failed(a.str(), search_failure(a, target, r));
  Trace t = r.path->to_trace();
  t.steps.push_back({Action::F, a});
  return passed({std::move(t)});
}

InstanceResult run_node_loop(const ClaimSpec& c, const BigInt& a, const VerifyOptions& o) {
  const auto r = bfs_find(c.model, a, [&](const BigInt& v) { return v == a; }, o.bounds_for(a), false);
  if (!r.found()) {
    return failed(a.str(), "no closed walk (" + std::string(to_string(r.status)) + " after " +
                               std::to_string(r.states) + " states)");
  }
  return passed({r.path->to_trace()});
}

InstanceResult run_m0_orbit(const BigInt& a, const VerifyOptions& o) {
  const StatsRow row = trajectory_stats(a, o.trajectory_cap);
  if (row.depth_exceeded) {
    return failed(a.str(), "did not reach 1 within " + std::to_string(o.trajectory_cap) + " steps");
  }
  return passed();
}

InstanceResult run(const ClaimSpec& c, const BigInt& a, int n, const VerifyOptions& o) {
  if (!c.pre.holds(a)) return skipped("precondition " + c.pre.str() + " does not hold");
  switch (c.kind) {
    case ClaimKind::scripted: return run_scripted(c, a, n, o);
    case ClaimKind::inverse: return run_inverse(c, a, n, o);
    case ClaimKind::dispatch: return run_dispatch(c, a, n, o);
    case ClaimKind::append_reduction: return run_append(c, a, n, o);
    case ClaimKind::succession: return run_succession(c, a);
    case ClaimKind::m2_reach: return run_m2_reach(a);
    case ClaimKind::cluster: return run_cluster(c, a, o);
    case ClaimKind::reach: return run_reach(c, a, o);
    case ClaimKind::descending: return run_descending(c, a, o);
    case ClaimKind::edge_loop: return run_edge_loop(c, a, o);
    case ClaimKind::node_loop: return run_node_loop(c, a, o);
    case ClaimKind::m0_orbit: return run_m0_orbit(a, o);
    case ClaimKind::deloop:
    case ClaimKind::cycle_census: break;
  }
  throw Error(c.id + " is checked over a whole graph, not per instance");
}

// Every witness of a pass must replay from scratch.
InstanceResult checked(InstanceResult r, const std::string& in) {
  if (r.verdict != Verdict::pass) return r;
  for (const auto& w : r.witnesses) {
    if (auto bad = revalidate(w)) {
      return failed(in, "witness does not replay: " + bad->reason, bad->step_index, w);
    }
  }
  return r;
}

struct Tally {
  VerifyReport& report;
  const VerifyOptions& opts;
  std::map<std::string, std::size_t> notes;
  std::size_t max_witness = 0;

  void add(InstanceResult&& r, std::size_t witness_length = 0) {
    switch (r.verdict) {
      case Verdict::pass: ++report.pass; break;
      case Verdict::skipped: ++report.skipped; break;
      case Verdict::fail:
        ++report.fail;
        if (report.failures.size() < opts.max_recorded_failures) report.failures.push_back(std::move(*r.failure));
        break;
    }
    if (!r.note.empty()) ++notes[r.note];
    max_witness = std::max(max_witness, witness_length);
  }

  void finish() {
    if (!notes.empty()) report.extra["notes"] = notes;
    if (max_witness > 0) report.extra["max_witness_length"] = max_witness;
    if (report.fail > report.failures.size()) report.extra["failures_truncated"] = true;
  }
};

NodeId node_bound(const BigInt& hi) {
  if (hi > BigInt(std::numeric_limits<NodeId>::max() >> 24)) throw DomainViolation("graph bound too large");
  return hi.convert_to<NodeId>();
}

void verify_deloop(VerifyReport& rep, Tally& tally, const VerifyOptions& o) {
  const NodeId lo = node_bound(rep.lo);
  const NodeId hi = node_bound(rep.hi);
  const DeloopResult d = delooping_experiment(hi, o.headroom_shift);
  const BoundedGraph last = bounded_graph(Model::MS, hi, drop_classes(d.phases[2].removed));
  const BoundedGraph m0 = bounded_graph(Model::M0, hi);
  for (NodeId v = lo; v <= hi; ++v) {
    InstanceResult r;
    for (const auto& phase : d.phases) {
      if (std::binary_search(phase.unreached.begin(), phase.unreached.end(), v)) {
        r = failed(std::to_string(v), "no walk to 1 below " + std::to_string(d.cap) + " in " + phase.name);
        break;
      }
    }
    if (r.verdict == Verdict::pass) {
      const auto a = last.out_edges(v);
      const auto b = m0.out_edges(v);
      const bool same = a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](auto& x, auto& y) {
                          return x.action == y.action && x.to == y.to;
                        });
      if (!same) r = failed(std::to_string(v), "final phase edges differ from M0");
    }
    tally.add(std::move(r));
  }
  nlohmann::json phases = nlohmann::json::array();
  for (const auto& phase : d.phases) {
    std::vector<std::string> removed;
    for (auto e : phase.removed) removed.emplace_back(to_string(e));
    std::vector<NodeId> sample(phase.unreached.begin(),
                               phase.unreached.begin() + std::min<std::size_t>(phase.unreached.size(), 100));
    phases.push_back({{"name", phase.name},
                      {"removed", removed},
                      {"edges", phase.edges},
                      {"unreached_count", phase.unreached.size()},
                      {"unreached", sample}});
  }
  rep.extra["cap"] = d.cap;
  rep.extra["phases"] = phases;
  rep.extra["final_equals_m0"] = d.final_equals_m0;
}

void verify_census(VerifyReport& rep, Tally& tally, const VerifyOptions& o) {
  const NodeId lo = node_bound(rep.lo);
  const NodeId hi = node_bound(rep.hi);
  const CensusResult census = cycle_census(rep.model, hi, o.max_cycles);
  const std::vector<NodeId> trivial{1, 4, 2};
  std::map<NodeId, const std::vector<NodeId>*> on_other;
  for (const auto& cyc : census.cycles) {
    if (cyc == trivial) continue;
    for (NodeId v : cyc) on_other.emplace(v, &cyc);
  }
  for (NodeId v = lo; v <= hi; ++v) {
    auto it = on_other.find(v);
    if (it == on_other.end()) {
      tally.add(passed());
      continue;
    }
    std::string cyc;
    for (NodeId u : *it->second) cyc += std::to_string(u) + " -> ";
    cyc += std::to_string(it->second->front());
    tally.add(failed(std::to_string(v), "lies on the cycle " + cyc));
  }
  rep.extra["cycles"] = census.cycles;
  rep.extra["truncated"] = census.truncated;
}

}  // namespace

InstanceResult verify_instance(const ClaimSpec& spec, const BigInt& a, const VerifyOptions& opts, int n) {
  try {
    if (!spec.indexed || n > 0) return checked(run(spec, a, n, opts), label(a, n));
    if (!spec.pre.holds(a)) return skipped("precondition " + spec.pre.str() + " does not hold");
    std::vector<Trace> witnesses;
    for (int k = 1; k <= opts.append_depth; ++k) {
      InstanceResult r = checked(run(spec, a, k, opts), label(a, k));
      if (r.verdict != Verdict::pass) return r;
      for (auto& w : r.witnesses) witnesses.push_back(std::move(w));
    }
    return passed(std::move(witnesses));
  } catch (const Error& e) {
    return failed(label(a, n), e.what());
  }
}

VerifyReport verify_claim(const ClaimSpec& spec, const BigInt& lo, const BigInt& hi, const VerifyOptions& opts) {
  const bool by_cluster = spec.kind == ClaimKind::cluster;
  if (lo > hi) throw DomainViolation("empty range " + lo.str() + ".." + hi.str());
  if (lo < (by_cluster ? 0 : 1)) throw DomainViolation("range must start at " + std::string(by_cluster ? "0" : "1"));
  if (by_cluster && opts.cluster_bound < 9 * hi + 8) {
    throw DomainViolation("cluster bound " + opts.cluster_bound.str() + " is below 9k+8 for k=" + hi.str());
  }
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport rep;
  rep.claim_id = spec.id;
  rep.model = spec.model;
  rep.lo = lo;
  rep.hi = hi;
  rep.bounds = opts.to_json();
  Tally tally{rep, opts, {}, 0};

  if (spec.kind == ClaimKind::deloop) {
    verify_deloop(rep, tally, opts);
  } else if (spec.kind == ClaimKind::cycle_census) {
    verify_census(rep, tally, opts);
  } else {
    const BigInt span = hi - lo + 1;
    if (span > BigInt(std::size_t{1} << 32)) throw DomainViolation("range too large");
    const auto count = span.convert_to<std::size_t>();
    auto results = parallel_map(count, opts.workers, [&](std::size_t i) {
      InstanceResult r = verify_instance(spec, lo + i, opts);
      // Reports keep witness lengths only.
      std::size_t longest = 0;
      for (const auto& w : r.witnesses) longest = std::max(longest, w.steps.size());
      r.witnesses.clear();
      return std::pair{std::move(r), longest};
    });
    for (auto& [r, longest] : results) tally.add(std::move(r), longest);
  }
  tally.finish();
  if (opts.timing) {
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  return rep;
}

VerifyReport verify_claim(std::string_view id, const BigInt& lo, const BigInt& hi, const VerifyOptions& opts) {
  return verify_claim(find_claim(id), lo, hi, opts);
}

VerifyReport verify_succession(int offset, const BigInt& lo, const BigInt& hi) {
  if (offset == 0 || std::abs(offset) > 4) throw DomainViolation("succession offset must be in -4..-1 or 1..4");
  const std::string id = (offset > 0 ? "T.succ" : "T.prec") + std::to_string(std::abs(offset));
  return verify_claim(id, lo, hi);
}

VerifyReport verify_cluster(ClusterShape shape, const BigInt& k_lo, const BigInt& k_hi, const VerifyOptions& opts) {
  const char* id = shape == ClusterShape::five ? "T.5cluster" : shape == ClusterShape::three ? "T.3cluster" : "T.9cluster";
  return verify_claim(id, k_lo, k_hi, opts);
}

VerifyReport verify_attaching(const BigInt& lo, const BigInt& hi, const VerifyOptions& opts) {
  return verify_claim("T.5attach", lo, hi, opts);
}

VerifyReport verify_descending(Model m, const BigInt& lo, const BigInt& hi, const VerifyOptions& opts,
                               const Precondition& pre) {
  ClaimSpec spec;
  spec.id = "descending." + std::string(to_string(m));
  spec.statement = "every A > 1 reaches a smaller value";
  spec.kind = ClaimKind::descending;
  spec.model = m;
  spec.pre = pre;
  return verify_claim(spec, lo, hi, opts);
}

VerifyReport verify_edge_loop(const BigInt& lo, const BigInt& hi, const VerifyOptions& opts) {
  return verify_claim("T.edge-loop", lo, hi, opts);
}

}  // namespace collatz
