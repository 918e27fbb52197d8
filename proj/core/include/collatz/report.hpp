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

#include <iosfwd>
#include <vector>

#include <nlohmann/json.hpp>

#include "collatz/actions.hpp"
#include "collatz/verify.hpp"

namespace collatz {

/// {"model", "start", "steps": [{"action", "value", "ternary"}]}. Values are
/// decimal strings.
nlohmann::json trace_to_json(const Trace& t);

/// One JSON object per line: the start value, then one line per step.
void write_trace_jsonl(std::ostream& out, const Trace& t);

/// {claim_id, model, statement, range, pass, fail, skipped, failures,
/// bounds, extra, wall_ms}. wall_ms is null unless timing was requested.
nlohmann::json report_to_json(const VerifyReport& r);

/// {"reports": [...], "pass", "fail", "skipped"} with the totals.
void write_reports_json(std::ostream& out, const std::vector<VerifyReport>& reports);

/// Header "claim_id,model,lo,hi,pass,fail,skipped,wall_ms"; one row each.
void write_reports_csv(std::ostream& out, const std::vector<VerifyReport>& reports);

/// "PASS T.succ1 M2 [1..1000] pass=1000 fail=0 skipped=0" plus the first
/// few failures of each failing claim.
void write_reports_text(std::ostream& out, const std::vector<VerifyReport>& reports);

}  // namespace collatz
