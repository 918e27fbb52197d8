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
#include <optional>
#include <stdexcept>
#include <string>

namespace collatz {

/// Base of every error thrown by the library. Errors raised while applying
/// a sequence carry the index of the failing step.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what), reason_(what) {}
  Error(const std::string& what, std::size_t step_index)
      : std::runtime_error("step " + std::to_string(step_index) + ": " + what),
        reason_(what),
        step_index_(step_index) {}

  std::optional<std::size_t> step_index() const noexcept { return step_index_; }
  /// The message without the step prefix.
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
  std::optional<std::size_t> step_index_;
};

/// An action was applied where the model's guard table forbids it.
class GuardViolation : public Error {
 public:
  using Error::Error;
};

/// The result leaves the model's value domain (zero, negative, or
/// non-integral in an integer model).
class DomainViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at index " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class IllegalEdge : public Error {
 public:
  using Error::Error;
};

class UnknownClaim : public Error {
 public:
  using Error::Error;
};

/// A trajectory did not reach 1 within its step cap.
class DepthExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace collatz
