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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "collatz/catalog.hpp"
#include "collatz/census.hpp"
#include "collatz/deloop.hpp"
#include "collatz/errors.hpp"
#include "collatz/models.hpp"
#include "collatz/report.hpp"
#include "collatz/search.hpp"
#include "collatz/verify.hpp"

namespace collatz::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  BigInt lo;
  BigInt hi;
};

BigInt parse_value(const std::string& text, const char* what) {
  try {
    return parse_bigint(text);
  } catch (const Error&) {
    throw UsageError(std::string(what) + ": '" + text + "' is not a decimal integer");
  }
}

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_value(text, "range");
  } else {
    r.lo = parse_value(text.substr(0, dots), "range");
    r.hi = parse_value(text.substr(dots + 2), "range");
  }
  if (r.lo > r.hi) throw UsageError("range " + text + " is empty");
  return r;
}

Model parse_model_arg(const std::string& text) {
  if (auto m = parse_model(text)) return *m;
  throw UsageError("unknown model '" + text + "' (expected m0, ms, m1 or m2)");
}

NodeId parse_node_bound(const std::string& text) {
  const BigInt v = parse_value(text, "--max");
  if (v < 1 || v > BigInt(1) << 36) throw UsageError("--max must be in 1..2^36");
  return v.convert_to<NodeId>();
}

std::string with_ternary(const BigInt& v, bool verbose) {
  if (!verbose || v < 1) return v.str();
  return v.str() + "[" + Ternary::from_integer(v).str() + "]";
}

// Shared search and verification knobs.
struct Knobs {
  unsigned value_shift = 20;
  std::size_t max_depth = 64;
  std::size_t max_states = std::size_t{1} << 21;
  std::string cluster_bound = "1048576";
  int append_depth = 6;
  unsigned headroom = 10;
  std::size_t max_steps = kDefaultTrajectoryCap;
  unsigned workers = 0;
  bool timing = false;

  void add_search(CLI::App* app) {
    app->add_option("--value-shift", value_shift, "Value cap is the input times 2^shift")->capture_default_str();
    app->add_option("--max-depth", max_depth, "Maximum walk length")->capture_default_str();
    app->add_option("--max-states", max_states, "Visited-state cap")->capture_default_str();
  }

  void add_verify(CLI::App* app) {
    add_search(app);
    app->add_option("--cluster-bound", cluster_bound, "Absolute value cap for cluster searches")
        ->capture_default_str();
    app->add_option("--append-depth", append_depth, "Largest n for A 2^n claims")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
    app->add_option("--headroom", headroom, "Delooping searches run below max * 2^headroom")
        ->check(CLI::Range(0, 30))
        ->capture_default_str();
    app->add_option("--max-steps", max_steps, "Trajectory step cap")->capture_default_str();
    app->add_option("--workers", workers, "Worker threads; 0 uses COLLATZ_WORKERS or all cores")
        ->capture_default_str();
    app->add_flag("--timing", timing, "Record wall-clock time per claim");
  }

  VerifyOptions options() const {
    VerifyOptions o;
    o.value_shift = value_shift;
    o.max_depth = max_depth;
    o.max_states = max_states;
    o.cluster_bound = parse_value(cluster_bound, "--cluster-bound");
    o.append_depth = append_depth;
    o.headroom_shift = headroom;
    o.trajectory_cap = max_steps;
    o.workers = workers;
    o.timing = timing;
    return o;
  }
};

void write_reports(std::ostream& out, const std::string& format, const std::vector<VerifyReport>& reports) {
  if (format == "json") {
    write_reports_json(out, reports);
  } else if (format == "csv") {
    write_reports_csv(out, reports);
  } else {
    write_reports_text(out, reports);
  }
}

int exit_for(const std::vector<VerifyReport>& reports) {
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const VerifyReport& r) { return r.ok(); });
  return ok ? kExitClean : kExitFinding;
}

int cmd_traj(const std::string& n_text, const std::string& format, bool verbose, std::size_t max_steps,
             std::ostream& out, std::ostream& err) {
  const BigInt n = parse_value(n_text, "n");
  if (n < 1) throw UsageError("n must be a positive integer");
  Path p;
  try {
    p = trajectory(n, max_steps);
  } catch (const DepthExceeded& e) {
    err << e.what() << '\n';
    return kExitFinding;
  }
  const BigInt peak = *std::max_element(p.values.begin(), p.values.end());
  if (format == "csv") {
    out << "step,action,value,ternary\n";
    for (std::size_t i = 0; i < p.values.size(); ++i) {
      out << i << ',' << (i == 0 ? std::string() : std::string(1, to_char(p.actions[i - 1]))) << ','
          << p.values[i] << ',' << Ternary::from_integer(p.values[i]).str() << '\n';
    }
    return kExitClean;
  }
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    if (i > 0) out << ' ';
    out << with_ternary(p.values[i], verbose);
  }
  out << " | steps=" << p.length() << " peak=" << with_ternary(peak, verbose) << '\n';
  return kExitClean;
}

int cmd_verify(const std::vector<std::string>& claims, const std::string& range_text, const std::string& format,
               const Knobs& knobs, std::ostream& out) {
  std::vector<const ClaimSpec*> selected;
  for (const auto& id : claims) {
    if (id == "all") {
      for (const auto& c : catalog()) selected.push_back(&c);
    } else {
      selected.push_back(&find_claim(id));
    }
  }
  const Range range = parse_range(range_text);
  const VerifyOptions opts = knobs.options();
  std::vector<VerifyReport> reports;
  for (const ClaimSpec* c : selected) reports.push_back(verify_claim(*c, range.lo, range.hi, opts));
  write_reports(out, format, reports);
  return exit_for(reports);
}

int cmd_reach(const std::string& model_text, const std::string& from_text, const std::string& to_text,
              const std::string& max_value, const std::string& format, bool verbose, const Knobs& knobs,
              std::ostream& out) {
  const Model m = parse_model_arg(model_text);
  if (m == Model::M2) throw UsageError("reach searches integer models only");
  const BigInt from = parse_value(from_text, "--from");
  const BigInt to = parse_value(to_text, "--to");
  if (from < 1 || to < 1) throw UsageError("--from and --to must be positive");
  SearchBounds b = knobs.options().bounds_for(std::max(from, to));
  if (!max_value.empty()) b.max_value = parse_value(max_value, "--max-value");
  const ReachResult r = bfs_reach(m, from, to, b);
  if (!r.found()) {
    out << to_string(r.status) << " states=" << r.states << '\n';
    return kExitFinding;
  }
  if (format == "jsonl") {
    write_trace_jsonl(out, r.path->to_trace());
    return kExitClean;
  }
  if (verbose) {
    out << with_ternary(r.path->values.front(), true);
    for (std::size_t i = 0; i < r.path->actions.size(); ++i) {
      out << " -" << to_char(r.path->actions[i]) << "-> " << with_ternary(r.path->values[i + 1], true);
    }
    out << '\n';
  } else {
    out << r.path->str() << '\n';
  }
  out << "length=" << r.path->length() << " word=" << r.path->actions.str() << '\n';
  return kExitClean;
}

int cmd_cluster(const std::string& kind, const std::string& k_text, const std::string& format, const Knobs& knobs,
                std::ostream& out) {
  ClusterShape shape;
  if (kind == "five") {
    shape = ClusterShape::five;
  } else if (kind == "three") {
    shape = ClusterShape::three;
  } else if (kind == "nine") {
    shape = ClusterShape::nine;
  } else {
    throw UsageError("--kind must be five, three or nine");
  }
  const Range r = parse_range(k_text);
  if (r.lo < 0) throw UsageError("--k must be non-negative");
  const std::vector<VerifyReport> reports{verify_cluster(shape, r.lo, r.hi, knobs.options())};
  write_reports(out, format, reports);
  return exit_for(reports);
}

int cmd_deloop(const std::string& max_text, unsigned headroom, const std::string& format, std::ostream& out) {
  const NodeId max = parse_node_bound(max_text);
  const DeloopResult d = delooping_experiment(max, headroom);
  bool clean = d.final_equals_m0;
  for (const auto& ph : d.phases) clean = clean && ph.unreached.empty();
  if (format == "json") {
    nlohmann::json phases = nlohmann::json::array();
    for (const auto& ph : d.phases) {
      std::vector<std::string> removed;
      for (auto e : ph.removed) removed.emplace_back(to_string(e));
      phases.push_back({{"name", ph.name},
                        {"removed", removed},
                        {"edges", ph.edges},
                        {"reached", max - ph.unreached.size()},
                        {"unreached", ph.unreached}});
    }
    out << nlohmann::json{{"max_value", d.max_value},
                          {"cap", d.cap},
                          {"phases", phases},
                          {"final_equals_m0", d.final_equals_m0}}
               .dump(2)
        << '\n';
  } else {
    out << "max=" << d.max_value << " cap=" << d.cap << '\n';
    for (std::size_t i = 0; i < d.phases.size(); ++i) {
      const auto& ph = d.phases[i];
      out << "phase " << i + 1 << " (" << ph.name << "): edges=" << ph.edges
          << " reach_1=" << max - ph.unreached.size() << '/' << max;
      if (!ph.unreached.empty()) {
        out << " unreached:";
        for (std::size_t j = 0; j < std::min<std::size_t>(ph.unreached.size(), 20); ++j) out << ' ' << ph.unreached[j];
        if (ph.unreached.size() > 20) out << " ...";
      }
      out << '\n';
    }
    out << "phase 3 edges equal M0: " << (d.final_equals_m0 ? "yes" : "no") << '\n';
  }
  return clean ? kExitClean : kExitFinding;
}

int cmd_cycles(const std::string& model_text, const std::string& max_text, std::size_t max_cycles,
               std::ostream& out, std::ostream& err) {
  const Model m = parse_model_arg(model_text);
  if (m == Model::M2) throw UsageError("M2 has rational nodes; pick m0, ms or m1");
  const CensusResult c = cycle_census(m, parse_node_bound(max_text), max_cycles);
  bool unexpected = false;
  for (const auto& cyc : c.cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) out << (i ? " " : "") << cyc[i];
    out << '\n';
    unexpected = unexpected || cyc != std::vector<NodeId>{1, 4, 2};
  }
  if (c.truncated) err << "stopped after " << max_cycles << " cycles\n";
  return m == Model::M0 && unexpected ? kExitFinding : kExitClean;
}

int cmd_stats(const std::string& range_text, std::size_t max_steps, std::ostream& out) {
  const Range r = parse_range(range_text);
  if (r.lo < 1) throw UsageError("--range must start at 1 or above");
  bool exceeded = false;
  write_stats_csv_header(out);
  stopping_stats(r.lo, r.hi, max_steps, [&](const StatsRow& row) {
    exceeded = exceeded || row.depth_exceeded;
    write_stats_csv_row(out, row);
  });
  return exceeded ? kExitFinding : kExitClean;
}

int cmd_dot(const std::string& model_text, const std::string& max_text, std::ostream& out) {
  const Model m = parse_model_arg(model_text);
  if (m == Model::M2) throw UsageError("M2 has rational nodes; pick m0, ms or m1");
  write_dot(out, bounded_graph(m, parse_node_bound(max_text)));
  return kExitClean;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transition-system models of the 3x+1 problem: trajectories, reachability and claim checks"};
  app.name("collatz");
  app.require_subcommand(1);
  Knobs knobs;

  std::string n_text, format = "text";
  bool verbose = false;
  auto* traj = app.add_subcommand("traj", "Print the M0 trajectory of n with its step count and peak");
  traj->add_option("n", n_text, "Start value (>= 1)")->required();
  traj->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}))->capture_default_str();
  traj->add_option("--max-steps", knobs.max_steps, "Step cap")->capture_default_str();
  traj->add_flag("-v,--verbose", verbose, "Show ternary digits next to each value");

  std::vector<std::string> claims;
  std::string range_text = "1..1000", verify_format = "json";
  auto* verify = app.add_subcommand("verify", "Check catalogued claims over a parameter range");
  verify->add_option("--claim", claims, "Claim id, repeatable or comma separated; 'all' selects every claim")
      ->required()
      ->delimiter(',');
  verify->add_option("--range", range_text, "Parameters lo..hi inclusive")->capture_default_str();
  verify->add_option("--format", verify_format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  knobs.add_verify(verify);
  auto* list = app.add_subcommand("claims", "List claim ids with their statements");

  std::string model_text = "m1", from_text, to_text, max_value, reach_format = "text";
  auto* reach = app.add_subcommand("reach", "Shortest walk between two values");
  reach->add_option("--model", model_text, "m0, ms or m1")->capture_default_str();
  reach->add_option("--from", from_text, "Start value")->required();
  reach->add_option("--to", to_text, "Target value")->required();
  reach->add_option("--max-value", max_value, "Absolute value cap (default: larger endpoint * 2^value-shift)");
  reach->add_option("--format", reach_format, "text or jsonl")->check(CLI::IsMember({"text", "jsonl"}));
  reach->add_flag("-v,--verbose", verbose, "Show ternary digits next to each value");
  knobs.add_search(reach);

  std::string kind = "five", k_text = "1..100", cluster_format = "text";
  auto* cluster = app.add_subcommand("cluster", "Mutual reachability inside residue clusters 9k + r");
  cluster->add_option("--kind", kind, "five (r=0..4), three (r=5..7) or nine (r=0..8)")->capture_default_str();
  cluster->add_option("--k", k_text, "Cluster indices lo..hi")->capture_default_str();
  cluster->add_option("--format", cluster_format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  knobs.add_verify(cluster);

  std::string max_text, deloop_format = "text";
  unsigned headroom = 10;
  auto* deloop = app.add_subcommand("deloop", "Reachability of 1 in MS as E1 and E4 edges are removed");
  deloop->add_option("--max", max_text, "Largest node reported")->required();
  deloop->add_option("--headroom", headroom, "Search below max * 2^headroom")
      ->check(CLI::Range(0, 30))
      ->capture_default_str();
  deloop->add_option("--format", deloop_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::size_t max_cycles = 100000;
  auto* cycles = app.add_subcommand("cycles", "List elementary cycles of a bounded graph");
  cycles->add_option("--model", model_text, "m0, ms or m1")->capture_default_str();
  cycles->add_option("--max", max_text, "Largest node")->required();
  cycles->add_option("--max-cycles", max_cycles, "Stop after this many cycles")->capture_default_str();

  auto* stats = app.add_subcommand("stats", "CSV of M0 stopping times and peaks");
  stats->add_option("--range", range_text, "Start values lo..hi")->required();
  stats->add_option("--max-steps", knobs.max_steps, "Step cap")->capture_default_str();

  auto* dot = app.add_subcommand("dot", "Graphviz export of a bounded graph; F edges are red");
  dot->add_option("--model", model_text, "m0, ms or m1")->capture_default_str();
  dot->add_option("--max", max_text, "Largest node")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitClean;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitClean;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run 'collatz --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (*traj) return cmd_traj(n_text, format, verbose, knobs.max_steps, out, err);
    if (*verify) return cmd_verify(claims, range_text, verify_format, knobs, out);
    if (*list) {
      for (const auto& c : catalog()) {
        out << c.id << "  [" << to_string(c.model) << "]  " << c.statement;
        if (!c.pre.trivial()) out << "  (" << c.pre.str() << ")";
        out << '\n';
      }
      return kExitClean;
    }
    if (*reach) return cmd_reach(model_text, from_text, to_text, max_value, reach_format, verbose, knobs, out);
    if (*cluster) return cmd_cluster(kind, k_text, cluster_format, knobs, out);
    if (*deloop) return cmd_deloop(max_text, headroom, deloop_format, out);
    if (*cycles) return cmd_cycles(model_text, max_text, max_cycles, out, err);
    if (*stats) return cmd_stats(range_text, knobs.max_steps, out);
    if (*dot) return cmd_dot(model_text, max_text, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace collatz::cli
