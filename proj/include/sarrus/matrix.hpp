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

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sarrus {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "12", "-3", "3/2" or "-7/4" (surrounding blanks ignored) into a
/// canonical rational. Returns nullopt on anything else, including a zero
/// denominator.
std::optional<Rational> parse_rational(std::string_view text);

/// Exact square matrix. entry(r, c) is the entry in row r and column c, both
/// 1-based; in the a_c^r notation the subscript is the column.
class Matrix {
 public:
  /// Throws NonSquare if rows are ragged or not n x n, SizeTooSmall if empty.
  explicit Matrix(std::vector<std::vector<Rational>> rows);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(int n);

  int size() const noexcept { return n_; }
  const Rational& entry(int r, int c) const {
    return entries_[static_cast<std::size_t>((r - 1) * n_ + (c - 1))];
  }
  Rational& entry(int r, int c) {
    return entries_[static_cast<std::size_t>((r - 1) * n_ + (c - 1))];
  }

  /// True when every entry has denominator 1.
  bool is_integral() const;
  /// Entries as integers, row-major; only meaningful when is_integral().
  std::vector<Integer> integer_entries() const;
  /// Entries rounded to double, row-major.
  std::vector<double> to_doubles() const;

  Matrix transpose() const;
  Matrix with_columns_swapped(int a, int b) const;
  Matrix with_column_scaled(int c, const Rational& k) const;

  bool operator==(const Matrix& o) const { return n_ == o.n_ && entries_ == o.entries_; }

 private:
  Matrix(int n, std::vector<Rational> entries) : n_(n), entries_(std::move(entries)) {}

  int n_;
  std::vector<Rational> entries_;
};

std::string to_string(const Rational& q);

}  // namespace sarrus
