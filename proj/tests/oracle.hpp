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

// Reference implementations for tests. Fixed-width arithmetic, written
// directly from the model definitions; nothing here calls the library.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

enum class M { M0, MS, M1 };

inline std::string ternary(std::uint64_t n) {
  if (n == 0) return "0";
  std::string s;
  while (n > 0) {
    s.push_back(static_cast<char>('0' + n % 3));
    n /= 3;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

inline std::uint64_t from_ternary(const std::string& s) {
  std::uint64_t v = 0;
  for (char c : s) v = v * 3 + static_cast<std::uint64_t>(c - '0');
  return v;
}

inline bool allowed(char a, std::int64_t x, M m) {
  if (x < 1) return false;
  const bool odd = x % 2 == 1;
  switch (a) {
    case 'T': return m == M::M1 || odd;
    case 'B': return !odd;
    case 'F': return m != M::M0 && x % 3 == 1 && x > 1;
    case 'D': return m == M::M1;
  }
  return false;
}

inline std::int64_t step(char a, std::int64_t x) {
  switch (a) {
    case 'T': return 3 * x + 1;
    case 'B': return x / 2;
    case 'F': return (x - 1) / 3;
    case 'D': return 2 * x;
  }
  return x;
}

inline std::vector<std::pair<char, std::int64_t>> successors(std::int64_t x, M m) {
  std::vector<std::pair<char, std::int64_t>> out;
  for (char a : {'T', 'B', 'F', 'D'}) {
    if (allowed(a, x, m)) out.emplace_back(a, step(a, x));
  }
  return out;
}

/// Applies a word left to right; nullopt if a guard fails.
inline std::optional<std::int64_t> run(const std::string& word, std::int64_t x, M m) {
  for (char a : word) {
    if (!allowed(a, x, m)) return std::nullopt;
    x = step(a, x);
  }
  return x;
}

inline std::vector<std::uint64_t> orbit(std::uint64_t n) {
  std::vector<std::uint64_t> v{n};
  while (n != 1) {
    n = n % 2 ? 3 * n + 1 : n / 2;
    v.push_back(n);
  }
  return v;
}

/// Shortest walk length by plain BFS over values <= cap; -1 if none.
inline int distance(std::int64_t from, std::int64_t to, M m, std::int64_t cap) {
  if (from == to) return 0;
  std::vector<int> dist(static_cast<std::size_t>(cap + 1), -1);
  std::vector<std::int64_t> queue{from};
  dist[static_cast<std::size_t>(from)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::int64_t x = queue[head];
    for (const auto& [a, y] : successors(x, m)) {
      if (y > cap || dist[static_cast<std::size_t>(y)] >= 0) continue;
      dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
      if (y == to) return dist[static_cast<std::size_t>(y)];
      queue.push_back(y);
    }
  }
  return -1;
}

/// Deterministic generator for property tests (splitmix64).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t s_;
};

}  // namespace oracle
