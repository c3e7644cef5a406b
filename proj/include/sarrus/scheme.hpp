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

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sarrus/matrix.hpp"
#include "sarrus/permutation.hpp"

namespace sarrus {

/// A head permutation; expands to a 2n-1 column strip segment whose n starts
/// cover every cyclic shift of the head and of its reversal.
struct Block {
  Permutation head;
};

/// A sequence of column labels (each meant to lie in 1..n) with the 1-based
/// positions at which a length-n diagonal starts.
///
/// Nothing here is checked on construction so that malformed strips can be
/// loaded and diagnosed by validate().
struct SchemeStrip {
  int n = 0;
  std::vector<int> columns;
  std::vector<int> starts;

  bool operator==(const SchemeStrip&) const = default;
};

struct Scheme {
  int n = 0;
  std::vector<SchemeStrip> strips;

  bool operator==(const Scheme&) const = default;
  std::size_t start_count() const;
};

enum class Direction { descending, ascending };

/// Where a window lives: strip index (0-based) and start position (1-based).
struct WindowRef {
  int strip = 0;
  int start = 0;
  Direction direction = Direction::descending;

  auto operator<=>(const WindowRef&) const = default;
};

struct Window {
  int position;
  Permutation descending;
  Permutation ascending;
};

struct ValidationReport {
  int n = 0;
  std::size_t window_count = 0;
  std::uint64_t covered = 0;
  /// n! - covered; always set, even when `missing` is not enumerated.
  std::uint64_t missing_count = 0;
  std::vector<std::pair<Permutation, std::vector<WindowRef>>> duplicates;
  /// Enumerated only for n <= 10.
  std::vector<Permutation> missing;
  /// Starts whose window is not a bijection on {1..n} (or runs off the strip).
  std::vector<WindowRef> invalid_windows;
  std::size_t even_count = 0;
  std::size_t odd_count = 0;

  bool valid() const;
  bool operator==(const ValidationReport&) const = default;
};

/// columns = head ++ head[1..n-1], starts = 1..n.
SchemeStrip expand_block(const Block& b);

/// Label of the final column of expand_block(b): head(n - 1), or head(1) when n = 1.
int last_column(const Block& b);

/// Concatenates expanded blocks, merging the column shared by consecutive
/// blocks: each head must begin with the last column of the previous expanded
/// block, which is that head's (n-1)-th image. Throws ChainMismatch when it
/// does not, SizeMismatch on mixed sizes, InvalidScheme when empty.
SchemeStrip stitch_blocks(std::span<const Block> blocks);

/// Descending and ascending windows at every start. Throws InvalidWindow.
std::vector<Window> windows(const SchemeStrip& s);

/// Full coverage diagnostics against S_n. Never throws on a bad scheme.
ValidationReport validate(const Scheme& sch);

/// Operation counts gathered while expanding a determinant as a signed sum of
/// diagonal products.
struct EvalStats {
  std::uint64_t terms = 0;
  /// Counting all n factors of each product.
  std::uint64_t multiplications_factor = 0;
  /// Counting n - 1 multiplications per product.
  std::uint64_t multiplications_chained = 0;
  std::uint64_t additions = 0;
};

/// A validated scheme flattened into signed terms: for each window, the column
/// used in each row (row r reads columns[r - 1]) and the sign of that
/// permutation. Building one throws InvalidScheme unless validate() passes.
class EvaluationPlan {
 public:
  struct Term {
    Permutation columns;
    Sign sign;
    WindowRef origin;
  };

  explicit EvaluationPlan(const Scheme& sch);

  int size() const noexcept { return n_; }
  std::span<const Term> terms() const noexcept { return terms_; }

  Rational evaluate(const Matrix& m, EvalStats* stats = nullptr) const;
  std::pair<Rational, Rational> positive_negative_sums(const Matrix& m) const;

 private:
  int n_;
  std::vector<Term> terms_;
};

/// det(M) as the sum of parity-signed diagonal products over the scheme.
/// Throws SizeMismatch, InvalidScheme.
Rational evaluate(const Scheme& sch, const Matrix& m);

/// (sum over even windows, sum over odd windows); evaluate = first - second.
std::pair<Rational, Rational> positive_negative_sums(const Scheme& sch, const Matrix& m);

}  // namespace sarrus
