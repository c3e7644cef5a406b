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

#include "sarrus/scheme.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "sarrus/error.hpp"

namespace sarrus {

std::size_t Scheme::start_count() const {
  std::size_t total = 0;
  for (const auto& s : strips) total += s.starts.size();
  return total;
}

bool ValidationReport::valid() const {
  return n >= 1 && duplicates.empty() && invalid_windows.empty() && missing_count == 0;
}

SchemeStrip expand_block(const Block& b) {
  const int n = b.head.size();
  SchemeStrip s;
  s.n = n;
  const auto head = b.head.images();
  s.columns.assign(head.begin(), head.end());
  s.columns.insert(s.columns.end(), head.begin(), head.end() - 1);
  for (int p = 1; p <= n; ++p) s.starts.push_back(p);
  return s;
}

int last_column(const Block& b) {
  const int n = b.head.size();
  return n == 1 ? b.head(1) : b.head(n - 1);
}

SchemeStrip stitch_blocks(std::span<const Block> blocks) {
  if (blocks.empty()) throw InvalidScheme("stitch_blocks: no blocks");
  const int n = blocks.front().head.size();
  SchemeStrip out = expand_block(blocks.front());
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    const auto& prev = blocks[i - 1].head;
    const auto& next = blocks[i].head;
    if (next.size() != n) throw SizeMismatch("stitch_blocks: mixed block sizes");
    if (next(1) != out.columns.back()) {
      throw ChainMismatch(i - 1, "block " + std::to_string(i) + " head " + to_string(prev) +
                                     " does not chain onto " + to_string(next));
    }
    const SchemeStrip seg = expand_block(blocks[i]);
    const int offset = static_cast<int>(out.columns.size()) - 1;
    out.columns.insert(out.columns.end(), seg.columns.begin() + 1, seg.columns.end());
    for (int p : seg.starts) out.starts.push_back(p + offset);
  }
  return out;
}

namespace {

// The n column labels starting at 1-based position `start`, or nothing when
// the window runs off the strip, leaves 1..n, or repeats a label.
std::optional<Permutation> window_at(const SchemeStrip& s, int n, int start) {
  if (start < 1 || n < 1) return std::nullopt;
  const auto first = static_cast<std::size_t>(start - 1);
  if (first + static_cast<std::size_t>(n) > s.columns.size()) return std::nullopt;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(n));
  for (std::size_t i = first; i < first + static_cast<std::size_t>(n); ++i) {
    const int c = s.columns[i];
    if (c < 1 || c > n || seen[static_cast<std::size_t>(c)]) return std::nullopt;
    seen[static_cast<std::size_t>(c)] = true;
    images.push_back(c);
  }
  return Permutation(std::move(images));
}

}  // namespace

std::vector<Window> windows(const SchemeStrip& s) {
  std::vector<Window> out;
  out.reserve(s.starts.size());
  for (int p : s.starts) {
    auto desc = window_at(s, s.n, p);
    if (!desc) {
      throw InvalidWindow(p, "window at start " + std::to_string(p) +
                                 " is not a permutation of 1.." + std::to_string(s.n));
    }
    Permutation asc = reverse(*desc);
    out.push_back(Window{p, std::move(*desc), std::move(asc)});
  }
  return out;
}

ValidationReport validate(const Scheme& sch) {
  ValidationReport rep;
  rep.n = sch.n;
  rep.window_count = 2 * sch.start_count();

  std::map<Permutation, std::vector<WindowRef>> hits;
  for (std::size_t si = 0; si < sch.strips.size(); ++si) {
    const auto& strip = sch.strips[si];
    for (int p : strip.starts) {
      const WindowRef ref{static_cast<int>(si), p, Direction::descending};
      auto desc = strip.n == sch.n ? window_at(strip, sch.n, p) : std::nullopt;
      if (!desc) {
        rep.invalid_windows.push_back(ref);
        continue;
      }
      Permutation asc = reverse(*desc);
      const bool self_reverse = asc == *desc;
      for (auto [perm, dir] : {std::pair{*desc, Direction::descending},
                               std::pair{asc, Direction::ascending}}) {
        if (dir == Direction::ascending && self_reverse) break;
        (parity(perm) == Sign::plus ? rep.even_count : rep.odd_count) += 1;
        hits[perm].push_back(WindowRef{ref.strip, ref.start, dir});
      }
    }
  }

  rep.covered = hits.size();
  for (auto& [perm, refs] : hits) {
    if (refs.size() > 1) rep.duplicates.emplace_back(perm, refs);
  }
  if (sch.n >= 1 && sch.n <= 20) {
    const std::uint64_t total = factorial(sch.n);
    rep.missing_count = total > rep.covered ? total - rep.covered : 0;
  }
  if (sch.n >= 1 && sch.n <= 10 && rep.missing_count > 0) {
    for_each_permutation(sch.n, [&](const Permutation& p) {
      if (!hits.contains(p)) rep.missing.push_back(p);
    });
  }
  return rep;
}

EvaluationPlan::EvaluationPlan(const Scheme& sch) : n_(sch.n) {
  const ValidationReport rep = validate(sch);
  if (!rep.valid()) {
    throw InvalidScheme("scheme does not cover S_" + std::to_string(sch.n) + " exactly once (" +
                        std::to_string(rep.covered) + " covered, " +
                        std::to_string(rep.duplicates.size()) + " duplicated, " +
                        std::to_string(rep.invalid_windows.size()) + " invalid windows)");
  }
  for (std::size_t si = 0; si < sch.strips.size(); ++si) {
    for (auto& w : windows(sch.strips[si])) {
      const bool self_reverse = w.ascending == w.descending;
      const Sign desc_sign = parity(w.descending);
      terms_.push_back(Term{w.descending, desc_sign,
                            WindowRef{static_cast<int>(si), w.position, Direction::descending}});
      if (!self_reverse) {
        const Sign asc_sign = parity(w.ascending);
        terms_.push_back(Term{std::move(w.ascending), asc_sign,
                              WindowRef{static_cast<int>(si), w.position, Direction::ascending}});
      }
    }
  }
}

namespace {

// Sums of products over the even and the odd terms, computed in T (mpz for
// integral input, mpq otherwise).
template <class T>
std::pair<T, T> split_sums(std::span<const EvaluationPlan::Term> terms, const std::vector<T>& e,
                           int n, EvalStats* stats) {
  T plus = 0;
  T minus = 0;
  T prod;
  for (const auto& t : terms) {
    const auto cols = t.columns.images();
    prod = e[static_cast<std::size_t>(cols[0] - 1)];
    for (int r = 1; r < n; ++r) prod *= e[static_cast<std::size_t>(r * n + cols[static_cast<std::size_t>(r)] - 1)];
    (t.sign == Sign::plus ? plus : minus) += prod;
  }
  if (stats != nullptr) {
    const auto k = static_cast<std::uint64_t>(terms.size());
    stats->terms += k;
    stats->multiplications_factor += k * static_cast<std::uint64_t>(n);
    stats->multiplications_chained += k * static_cast<std::uint64_t>(n - 1);
    stats->additions += k > 0 ? k - 1 : 0;
  }
  return {std::move(plus), std::move(minus)};
}

std::vector<Rational> rational_entries(const Matrix& m) {
  std::vector<Rational> e;
  e.reserve(static_cast<std::size_t>(m.size() * m.size()));
  for (int r = 1; r <= m.size(); ++r) {
    for (int c = 1; c <= m.size(); ++c) e.push_back(m.entry(r, c));
  }
  return e;
}

std::pair<Rational, Rational> plan_sums(std::span<const EvaluationPlan::Term> terms, int n,
                                        const Matrix& m, EvalStats* stats) {
  if (m.size() != n) {
    throw SizeMismatch("scheme is for n = " + std::to_string(n) + ", matrix is " +
                       std::to_string(m.size()) + "x" + std::to_string(m.size()));
  }
  if (m.is_integral()) {
    auto [p, q] = split_sums<Integer>(terms, m.integer_entries(), n, stats);
    return {Rational(p), Rational(q)};
  }
  return split_sums<Rational>(terms, rational_entries(m), n, stats);
}

}  // namespace

Rational EvaluationPlan::evaluate(const Matrix& m, EvalStats* stats) const {
  auto [plus, minus] = plan_sums(terms_, n_, m, stats);
  Rational det = plus - minus;
  det.canonicalize();
  return det;
}

std::pair<Rational, Rational> EvaluationPlan::positive_negative_sums(const Matrix& m) const {
  return plan_sums(terms_, n_, m, nullptr);
}

Rational evaluate(const Scheme& sch, const Matrix& m) {
  if (m.size() != sch.n) {
    throw SizeMismatch("scheme is for n = " + std::to_string(sch.n) + ", matrix is " +
                       std::to_string(m.size()) + "x" + std::to_string(m.size()));
  }
  return EvaluationPlan(sch).evaluate(m);
}

std::pair<Rational, Rational> positive_negative_sums(const Scheme& sch, const Matrix& m) {
  if (m.size() != sch.n) {
    throw SizeMismatch("scheme is for n = " + std::to_string(sch.n) + ", matrix is " +
                       std::to_string(m.size()) + "x" + std::to_string(m.size()));
  }
  return EvaluationPlan(sch).positive_negative_sums(m);
}

}  // namespace sarrus
