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

#include "collatz/report.hpp"

#include <ostream>

#include "collatz/catalog.hpp"

namespace collatz {

namespace {

std::string ternary_of(const BigInt& v) { return v >= 1 ? Ternary::from_integer(v).str() : std::string("0"); }

std::string statement_of(const std::string& id) {
  for (const auto& c : catalog()) {
    if (c.id == id) return c.statement;
  }
  return {};
}

}  // namespace

nlohmann::json trace_to_json(const Trace& t) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"action", std::string(1, to_char(s.action))},
                     {"value", s.value.str()},
                     {"ternary", ternary_of(s.value)}});
  }
  return {{"model", std::string(to_string(t.model))},
          {"start", t.start.str()},
          {"start_ternary", ternary_of(t.start)},
          {"steps", std::move(steps)}};
}

void write_trace_jsonl(std::ostream& out, const Trace& t) {
  out << nlohmann::json{{"step", 0}, {"action", nullptr}, {"value", t.start.str()}, {"ternary", ternary_of(t.start)}}
      << '\n';
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    out << nlohmann::json{{"step", i + 1},
                          {"action", std::string(1, to_char(s.action))},
                          {"value", s.value.str()},
                          {"ternary", ternary_of(s.value)}}
        << '\n';
  }
}

nlohmann::json report_to_json(const VerifyReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"input", f.input},
                        {"step_index", f.step_index ? nlohmann::json(*f.step_index) : nlohmann::json()},
                        {"reason", f.reason},
                        {"trace", f.trace ? trace_to_json(*f.trace) : nlohmann::json()}});
  }
  return {{"claim_id", r.claim_id},
          {"statement", statement_of(r.claim_id)},
          {"model", std::string(to_string(r.model))},
          {"range", {r.lo.str(), r.hi.str()}},
          {"pass", r.pass},
          {"fail", r.fail},
          {"skipped", r.skipped},
          {"failures", std::move(failures)},
          {"bounds", r.bounds},
          {"extra", r.extra},
          {"wall_ms", r.wall_ms ? nlohmann::json(*r.wall_ms) : nlohmann::json()}};
}

void write_reports_json(std::ostream& out, const std::vector<VerifyReport>& reports) {
  nlohmann::json all = nlohmann::json::array();
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto& r : reports) {
    all.push_back(report_to_json(r));
    pass += r.pass;
    fail += r.fail;
    skipped += r.skipped;
  }
  nlohmann::json doc = {{"reports", std::move(all)}, {"pass", pass}, {"fail", fail}, {"skipped", skipped}};
  out << doc.dump(2) << '\n';
}

void write_reports_csv(std::ostream& out, const std::vector<VerifyReport>& reports) {
  out << "claim_id,model,lo,hi,pass,fail,skipped,wall_ms\n";
  for (const auto& r : reports) {
    out << r.claim_id << ',' << to_string(r.model) << ',' << r.lo << ',' << r.hi << ',' << r.pass << ',' << r.fail
        << ',' << r.skipped << ',';
    if (r.wall_ms) out << *r.wall_ms;
    out << '\n';
  }
}

void write_reports_text(std::ostream& out, const std::vector<VerifyReport>& reports) {
  constexpr std::size_t kShown = 5;
  for (const auto& r : reports) {
    out << (r.ok() ? "PASS " : "FAIL ") << r.claim_id << ' ' << to_string(r.model) << " [" << r.lo << ".." << r.hi
        << "] pass=" << r.pass << " fail=" << r.fail << " skipped=" << r.skipped;
    if (r.wall_ms) out << " wall_ms=" << *r.wall_ms;
    out << '\n';
    for (std::size_t i = 0; i < std::min(kShown, r.failures.size()); ++i) {
      out << "  " << r.failures[i].input << ": " << r.failures[i].reason << '\n';
    }
    if (r.fail > kShown) out << "  ... " << (r.fail - kShown) << " more\n";
  }
}

}  // namespace collatz
