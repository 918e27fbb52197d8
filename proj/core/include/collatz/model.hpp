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

#include <optional>
#include <string_view>

namespace collatz {

/// The four transition systems, from the deterministic Collatz map (M0) to
/// the unguarded rational system (M2). Edge sets nest in this order.
enum class Model { M0, MS, M1, M2 };

constexpr std::string_view to_string(Model m) noexcept {
  switch (m) {
    case Model::M0: return "M0";
    case Model::MS: return "MS";
    case Model::M1: return "M1";
    case Model::M2: return "M2";
  }
  return "?";
}

/// Case-insensitive: "m0", "MS", "m1", "M2".
std::optional<Model> parse_model(std::string_view text);

constexpr bool is_integer_model(Model m) noexcept { return m != Model::M2; }

}  // namespace collatz
