// Copyright 2026 The Sarrus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Test-only reference routines. They deliberately avoid the library's
// permutation and evaluation code so they can act as independent oracles.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "sarrus/matrix.hpp"

namespace sarrus::testing {

// +1 / -1 by counting inversions (the library uses cycle decomposition).
inline int inversion_sign(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

inline std::vector<std::vector<int>> all_perms(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<int> rotate_left(std::vector<int> p, int k) {
  std::rotate(p.begin(), p.begin() + k, p.end());
  return p;
}

inline std::vector<int> reversed(std::vector<int> p) {
  std::reverse(p.begin(), p.end());
  return p;
}

using IntMatrix = std::vector<std::vector<long long>>;

// Plain 64-bit Leibniz sums (even, odd); entries must be small enough not to
// overflow (|a| <= 9 is fine up to n = 8).
inline std::pair<long long, long long> brute_sums(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  long long plus = 0;
  long long minus = 0;
  for (const auto& p : all_perms(n)) {
    long long prod = 1;
    for (int r = 0; r < n; ++r) prod *= m[static_cast<std::size_t>(r)][static_cast<std::size_t>(p[static_cast<std::size_t>(r)] - 1)];
    (inversion_sign(p) > 0 ? plus : minus) += prod;
  }
  return {plus, minus};
}

inline long long brute_det(const IntMatrix& m) {
  auto [p, q] = brute_sums(m);
  return p - q;
}

inline IntMatrix random_int_matrix(int n, std::mt19937_64& rng, long lo = -9, long hi = 9) {
  std::uniform_int_distribution<long long> d(lo, hi);
  IntMatrix m(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n)));
  for (auto& row : m) {
    for (auto& v : row) v = d(rng);
  }
  return m;
}

inline Matrix to_matrix(const IntMatrix& m) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : m) {
    auto& dst = rows.emplace_back();
    for (long long v : row) dst.emplace_back(static_cast<long>(v));
  }
  return Matrix(std::move(rows));
}

inline IntMatrix worked_example_4x4() {
  return {{2, 3, 4, -1}, {1, -2, 0, 5}, {5, 2, 2, -3}, {8, 1, 1, 1}};
}

}  // namespace sarrus::testing
