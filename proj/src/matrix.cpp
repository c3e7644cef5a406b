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

#include "sarrus/matrix.hpp"

#include <cctype>
#include <utility>

#include "sarrus/error.hpp"

namespace sarrus {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer to_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) return std::nullopt;
    return Rational(to_integer(text));
  }
  const auto num = trim(text.substr(0, slash));
  const auto den = trim(text.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den)) return std::nullopt;
  Integer d = to_integer(den);
  if (d == 0) return std::nullopt;
  Rational q(to_integer(num), d);
  q.canonicalize();
  return q;
}

Matrix::Matrix(std::vector<std::vector<Rational>> rows) : n_(static_cast<int>(rows.size())) {
  if (rows.empty()) throw SizeTooSmall("matrix must have at least one row");
  entries_.reserve(rows.size() * rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) {
      throw NonSquare("row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                      " entries, expected " + std::to_string(rows.size()));
    }
    for (auto& q : rows[r]) {
      q.canonicalize();
      entries_.push_back(std::move(q));
    }
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows)
    : Matrix([&] {
        std::vector<std::vector<Rational>> out;
        for (const auto& row : rows) {
          auto& dst = out.emplace_back();
          for (long v : row) dst.emplace_back(v);
        }
        return out;
      }()) {}

Matrix Matrix::identity(int n) {
  if (n < 1) throw SizeTooSmall("identity needs n >= 1");
  std::vector<Rational> e(static_cast<std::size_t>(n * n), Rational(0));
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i * n + i)] = 1;
  return Matrix(n, std::move(e));
}

bool Matrix::is_integral() const {
  for (const auto& q : entries_) {
    if (q.get_den() != 1) return false;
  }
  return true;
}

std::vector<Integer> Matrix::integer_entries() const {
  std::vector<Integer> out;
  out.reserve(entries_.size());
  for (const auto& q : entries_) out.push_back(q.get_num());
  return out;
}

std::vector<double> Matrix::to_doubles() const {
  std::vector<double> out;
  out.reserve(entries_.size());
  for (const auto& q : entries_) out.push_back(q.get_d());
  return out;
}

Matrix Matrix::transpose() const {
  std::vector<Rational> e(entries_.size());
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) {
      e[static_cast<std::size_t>(c * n_ + r)] = entries_[static_cast<std::size_t>(r * n_ + c)];
    }
  }
  return Matrix(n_, std::move(e));
}

Matrix Matrix::with_columns_swapped(int a, int b) const {
  if (a < 1 || a > n_ || b < 1 || b > n_) throw IndexOutOfRange("column out of range");
  Matrix out = *this;
  for (int r = 1; r <= n_; ++r) std::swap(out.entry(r, a), out.entry(r, b));
  return out;
}

Matrix Matrix::with_column_scaled(int c, const Rational& k) const {
  if (c < 1 || c > n_) throw IndexOutOfRange("column out of range");
  Matrix out = *this;
  for (int r = 1; r <= n_; ++r) out.entry(r, c) *= k;
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace sarrus
