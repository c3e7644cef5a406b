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

#include "sarrus/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "sarrus/error.hpp"

namespace sarrus::oracle {

namespace {

void check_factorial_guard(const Matrix& m, const char* what) {
  if (m.size() > kFactorialLimit) {
    throw SizeLimitExceeded(std::string(what) + ": n = " + std::to_string(m.size()) +
                            " exceeds the factorial-time limit of " +
                            std::to_string(kFactorialLimit));
  }
}

std::vector<Rational> row_major(const Matrix& m) {
  std::vector<Rational> e;
  e.reserve(static_cast<std::size_t>(m.size() * m.size()));
  for (int r = 1; r <= m.size(); ++r) {
    for (int c = 1; c <= m.size(); ++c) e.push_back(m.entry(r, c));
  }
  return e;
}

template <class T>
std::pair<T, T> leibniz_split(const std::vector<T>& e, int n, EvalStats* stats) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  T plus = 0;
  T minus = 0;
  T prod;
  std::uint64_t terms = 0;
  do {
    prod = e[static_cast<std::size_t>(perm[0] - 1)];
    for (int r = 1; r < n; ++r) prod *= e[static_cast<std::size_t>(r * n + perm[static_cast<std::size_t>(r)] - 1)];
    (detail::parity_of(perm) == Sign::plus ? plus : minus) += prod;
    ++terms;
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (stats != nullptr) {
    stats->terms += terms;
    stats->multiplications_factor += terms * static_cast<std::uint64_t>(n);
    stats->multiplications_chained += terms * static_cast<std::uint64_t>(n - 1);
    stats->additions += terms - 1;
  }
  return {std::move(plus), std::move(minus)};
}

std::pair<Rational, Rational> leibniz_sums(const Matrix& m, EvalStats* stats) {
  if (m.is_integral()) {
    auto [p, q] = leibniz_split<Integer>(m.integer_entries(), m.size(), stats);
    return {Rational(p), Rational(q)};
  }
  return leibniz_split<Rational>(row_major(m), m.size(), stats);
}

// Determinant of the minor formed by rows first_row.. and the given columns.
template <class T>
T cofactor_rec(const std::vector<T>& e, int n, int first_row, std::vector<int>& cols,
               EvalStats* stats) {
  const auto k = cols.size();
  if (k == 1) {
    if (stats != nullptr) ++stats->terms;
    return e[static_cast<std::size_t>(first_row * n + cols[0])];
  }
  T det = 0;
  for (std::size_t j = 0; j < k; ++j) {
    const int col = cols[j];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(j));
    T term = e[static_cast<std::size_t>(first_row * n + col)] *
             cofactor_rec(e, n, first_row + 1, cols, stats);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(j), col);
    if (j % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  if (stats != nullptr) {
    stats->multiplications_factor += k;
    stats->multiplications_chained += k;
    stats->additions += k - 1;
  }
  return det;
}

}  // namespace

Rational leibniz_det(const Matrix& m, EvalStats* stats) {
  check_factorial_guard(m, "leibniz_det");
  auto [plus, minus] = leibniz_sums(m, stats);
  return plus - minus;
}

std::pair<Rational, Rational> parity_partition_sums(const Matrix& m) {
  check_factorial_guard(m, "parity_partition_sums");
  return leibniz_sums(m, nullptr);
}

Rational cofactor_det(const Matrix& m, EvalStats* stats) {
  std::vector<int> cols(static_cast<std::size_t>(m.size()));
  std::iota(cols.begin(), cols.end(), 0);
  if (m.is_integral()) {
    return Rational(cofactor_rec<Integer>(m.integer_entries(), m.size(), 0, cols, stats));
  }
  return cofactor_rec<Rational>(row_major(m), m.size(), 0, cols, stats);
}

Rational bareiss_det(const Matrix& m, EvalStats* stats) {
  const int n = m.size();
  const auto at = [n](int r, int c) { return static_cast<std::size_t>(r * n + c); };

  // Row r is scaled by the lcm of its denominators; det(M) = det(DM) / det(D).
  std::vector<Integer> a(static_cast<std::size_t>(n * n));
  Integer scale = 1;
  for (int r = 0; r < n; ++r) {
    Integer l = 1;
    for (int c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.entry(r + 1, c + 1).get_den_mpz_t());
    for (int c = 0; c < n; ++c) {
      const Rational& q = m.entry(r + 1, c + 1);
      a[at(r, c)] = q.get_num() * (l / q.get_den());
    }
    scale *= l;
  }

  std::uint64_t mults = 0;
  std::uint64_t adds = 0;
  int sign = 1;
  Integer prev = 1;
  Integer t;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[at(k, k)] == 0) {
      int pivot = k + 1;
      while (pivot < n && a[at(pivot, k)] == 0) ++pivot;
      if (pivot == n) {
        if (stats != nullptr) {
          stats->multiplications_factor += mults;
          stats->multiplications_chained += mults;
          stats->additions += adds;
        }
        return Rational(0);
      }
      for (int c = 0; c < n; ++c) std::swap(a[at(k, c)], a[at(pivot, c)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        t = a[at(i, j)] * a[at(k, k)] - a[at(i, k)] * a[at(k, j)];
        mpz_divexact(a[at(i, j)].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        mults += 2;
        adds += 1;
      }
    }
    prev = a[at(k, k)];
  }
  if (stats != nullptr) {
    stats->multiplications_factor += mults;
    stats->multiplications_chained += mults;
    stats->additions += adds;
  }
  Integer num = a[at(n - 1, n - 1)];
  if (sign < 0) num = -num;
  Rational det(num, scale);
  det.canonicalize();
  return det;
}

}  // namespace sarrus::oracle
