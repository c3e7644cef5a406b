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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "sarrus/builtin.hpp"
#include "sarrus/error.hpp"
#include "sarrus/oracle.hpp"
#include "sarrus/scheme.hpp"
#include "support/reference.hpp"

namespace sarrus {
namespace {

using testing::brute_det;
using testing::brute_sums;
using testing::worked_example_4x4;
using testing::random_int_matrix;
using testing::to_matrix;

TEST(ExpandBlock, Examples) {
  const auto s = expand_block(Block{Permutation::identity(5)});
  EXPECT_EQ(s.columns, (std::vector<int>{1, 2, 3, 4, 5, 1, 2, 3, 4}));
  EXPECT_EQ(s.starts, (std::vector<int>{1, 2, 3, 4, 5}));
  EXPECT_EQ(expand_block(Block{Permutation{4, 3, 5, 2, 1}}).columns,
            (std::vector<int>{4, 3, 5, 2, 1, 4, 3, 5, 2}));
  const auto one = expand_block(Block{Permutation{1}});
  EXPECT_EQ(one.columns, (std::vector<int>{1}));
  EXPECT_EQ(one.starts, (std::vector<int>{1}));
}

TEST(StitchBlocks, FirstTwoPBlocks) {
  const std::vector<Block> blocks{{Permutation{1, 2, 3, 4, 5}}, {Permutation{4, 3, 5, 2, 1}}};
  const auto s = stitch_blocks(blocks);
  EXPECT_EQ(s.columns, (std::vector<int>{1, 2, 3, 4, 5, 1, 2, 3, 4, 3, 5, 2, 1, 4, 3, 5, 2}));
  EXPECT_EQ(s.starts, (std::vector<int>{1, 2, 3, 4, 5, 9, 10, 11, 12, 13}));
}

TEST(StitchBlocks, AllSixPBlocksGive49Columns) {
  std::vector<Block> blocks;
  for (const auto& h : builtin::p_block_heads()) blocks.push_back(Block{h});
  const auto s = stitch_blocks(blocks);
  EXPECT_EQ(s.columns.size(), 6u * 9u - 5u);
  EXPECT_EQ(s.starts.size(), 30u);
}

TEST(StitchBlocks, SingleBlockEqualsExpand) {
  const Block b{Permutation{2, 5, 1, 3, 4}};
  const std::vector<Block> blocks{b};
  EXPECT_EQ(stitch_blocks(blocks), expand_block(b));
}

TEST(StitchBlocks, ChainMismatchReportsIndex) {
  const std::vector<Block> blocks{{Permutation{1, 2, 3, 4, 5}},
                                  {Permutation{4, 3, 5, 2, 1}},
                                  {Permutation{1, 2, 3, 4, 5}}};
  try {
    stitch_blocks(blocks);
    FAIL() << "expected ChainMismatch";
  } catch (const ChainMismatch& e) {
    EXPECT_EQ(e.index(), 1u);
  }
  EXPECT_THROW(stitch_blocks(std::vector<Block>{}), InvalidScheme);
}

TEST(StitchBlocks, WindowsAreUnionOfBlockWindows) {
  std::vector<Block> blocks;
  for (const auto& h : builtin::n_block_heads()) blocks.push_back(Block{h});
  std::multiset<Permutation> from_blocks;
  for (const auto& b : blocks) {
    for (const auto& w : windows(expand_block(b))) {
      from_blocks.insert(w.descending);
      from_blocks.insert(w.ascending);
    }
  }
  std::multiset<Permutation> from_strip;
  for (const auto& w : windows(stitch_blocks(blocks))) {
    from_strip.insert(w.descending);
    from_strip.insert(w.ascending);
  }
  EXPECT_EQ(from_blocks, from_strip);
}

TEST(Windows, Examples) {
  const Scheme sch = builtin::scheme_4x4();
  const auto ws = windows(sch.strips.front());
  EXPECT_EQ(ws.front().descending, (Permutation{1, 2, 3, 4}));
  EXPECT_EQ(ws.front().ascending, (Permutation{4, 3, 2, 1}));
  const auto at7 = std::find_if(ws.begin(), ws.end(), [](const Window& w) { return w.position == 7; });
  ASSERT_NE(at7, ws.end());
  EXPECT_EQ(at7->descending, (Permutation{3, 2, 4, 1}));

  const SchemeStrip sarrus3{3, {1, 2, 3, 1, 2}, {2}};
  EXPECT_EQ(windows(sarrus3).front().descending, (Permutation{2, 3, 1}));
}

TEST(Windows, InvalidWindowThrowsWithPosition) {
  const SchemeStrip bad{3, {1, 2, 2, 1, 3}, {1, 3}};
  try {
    windows(bad);
    FAIL() << "expected InvalidWindow";
  } catch (const InvalidWindow& e) {
    EXPECT_EQ(e.position(), 1);
  }
  EXPECT_THROW(windows(SchemeStrip{3, {1, 2, 3}, {2}}), InvalidWindow);  // runs off the end
}

TEST(Validate, BuiltinsAreComplete) {
  const auto r4 = validate(builtin::scheme_4x4());
  EXPECT_TRUE(r4.valid());
  EXPECT_EQ(r4.covered, 24u);
  EXPECT_EQ(r4.window_count, 24u);
  EXPECT_EQ(r4.even_count, 12u);
  EXPECT_EQ(r4.odd_count, 12u);

  const auto r5 = validate(builtin::scheme_5x5());
  EXPECT_TRUE(r5.valid());
  EXPECT_EQ(r5.covered, 120u);
  EXPECT_EQ(r5.even_count, 60u);
  EXPECT_EQ(r5.odd_count, 60u);
}

TEST(Validate, MutatedFourByFourIsReported) {
  auto sch = builtin::scheme_4x4();
  sch.strips[0].columns[4] = 2;  // 1-based column 5: 1 -> 2
  const auto rep = validate(sch);
  EXPECT_FALSE(rep.valid());
  EXPECT_TRUE(!rep.invalid_windows.empty() || !rep.duplicates.empty());
  EXPECT_GT(rep.missing_count, 0u);
  EXPECT_EQ(rep.missing.size(), rep.missing_count);
  EXPECT_EQ(rep.window_count, 24u);
}

TEST(Validate, DuplicatesAndMissingAreListedInLexOrder) {
  // Identity block for n = 2: both permutations hit twice.
  const Scheme sch{2, {SchemeStrip{2, {1, 2, 1}, {1, 2}}}};
  const auto rep = validate(sch);
  EXPECT_FALSE(rep.valid());
  ASSERT_EQ(rep.duplicates.size(), 2u);
  EXPECT_EQ(rep.duplicates[0].first, (Permutation{1, 2}));
  EXPECT_EQ(rep.duplicates[1].first, (Permutation{2, 1}));
  EXPECT_EQ(rep.duplicates[0].second.size(), 2u);

  const Scheme partial{4, {SchemeStrip{4, {1, 2, 3, 4, 1, 2, 3}, {1, 2, 3, 4}}}};
  const auto rp = validate(partial);
  EXPECT_EQ(rp.covered, 8u);
  ASSERT_EQ(rp.missing.size(), 16u);
  EXPECT_TRUE(std::is_sorted(rp.missing.begin(), rp.missing.end()));
}

TEST(Validate, DegenerateOneByOne) {
  const Scheme sch{1, {expand_block(Block{Permutation{1}})}};
  const auto rep = validate(sch);
  EXPECT_TRUE(rep.valid());
  EXPECT_EQ(rep.window_count, 2u);
  EXPECT_EQ(rep.covered, 1u);
  EXPECT_EQ(evaluate(sch, Matrix{{7}}), 7);
}

TEST(Validate, StripSizeMismatchIsInvalid) {
  Scheme sch = builtin::scheme_4x4();
  sch.strips[0].n = 5;
  EXPECT_EQ(validate(sch).invalid_windows.size(), 12u);
}

TEST(Evaluate, WorkedExample) {
  const Matrix m = to_matrix(worked_example_4x4());
  EXPECT_EQ(evaluate(builtin::scheme_4x4(), m), 140);
  const auto [plus, minus] = positive_negative_sums(builtin::scheme_4x4(), m);
  EXPECT_EQ(plus, 551);
  EXPECT_EQ(minus, 411);
}

TEST(Evaluate, IdentityMatrix) {
  for (int n = 2; n <= 5; ++n) {
    EXPECT_EQ(evaluate(builtin::for_size(n), Matrix::identity(n)), 1) << n;
    const auto [plus, minus] = positive_negative_sums(builtin::for_size(n), Matrix::identity(n));
    EXPECT_EQ(plus, 1);
    EXPECT_EQ(minus, 0);
  }
}

TEST(Evaluate, Errors) {
  EXPECT_THROW(evaluate(builtin::scheme_4x4(), Matrix::identity(3)), SizeMismatch);
  auto bad = builtin::scheme_4x4();
  bad.strips[0].starts.pop_back();
  EXPECT_THROW(evaluate(bad, Matrix::identity(4)), InvalidScheme);
}

TEST(Evaluate, MatchesBruteForceAndSplitsMatchParity) {
  std::mt19937_64 rng(21);
  for (int n : {4, 5}) {
    const EvaluationPlan plan(builtin::for_size(n));
    for (int trial = 0; trial < 300; ++trial) {
      const auto im = random_int_matrix(n, rng);
      const Matrix m = to_matrix(im);
      const auto [bp, bm] = brute_sums(im);
      const auto [sp, sm] = plan.positive_negative_sums(m);
      ASSERT_EQ(sp, Rational(static_cast<long>(bp)));
      ASSERT_EQ(sm, Rational(static_cast<long>(bm)));
      ASSERT_EQ(plan.evaluate(m), Rational(static_cast<long>(brute_det(im))));
    }
  }
}

TEST(Evaluate, MultilinearAndAlternatingInColumns) {
  std::mt19937_64 rng(22);
  for (int n : {3, 4, 5}) {
    const EvaluationPlan plan(builtin::for_size(n));
    for (int trial = 0; trial < 100; ++trial) {
      const Matrix m = to_matrix(random_int_matrix(n, rng));
      const Rational d = plan.evaluate(m);
      const int c = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
      const long k = static_cast<long>(rng() % 11) - 5;
      ASSERT_EQ(plan.evaluate(m.with_column_scaled(c, Rational(k))), d * k);
      const int c2 = c % n + 1;
      ASSERT_EQ(plan.evaluate(m.with_columns_swapped(c, c2)), -d);
    }
  }
}

TEST(Evaluate, RationalEntries) {
  const Matrix m({{Rational(1, 2), Rational(2, 3), Rational(1)},
                  {Rational(3), Rational(-1, 4), Rational(0)},
                  {Rational(5, 7), Rational(2), Rational(-1)}});
  EXPECT_EQ(evaluate(builtin::classic_sarrus(3), m), Rational(465, 56));
}

TEST(Evaluate, ReversalParityLawPerStart) {
  for (int n = 2; n <= 5; ++n) {
    const Sign flip = (n / 2) % 2 == 0 ? Sign::plus : Sign::minus;
    for (const auto& strip : builtin::for_size(n).strips) {
      for (const auto& w : windows(strip)) {
        ASSERT_EQ(parity(w.ascending), parity(w.descending) * flip);
      }
    }
  }
}

TEST(Evaluate, StatsCountNFactorialTerms) {
  EvalStats stats;
  EvaluationPlan(builtin::scheme_5x5()).evaluate(Matrix::identity(5), &stats);
  EXPECT_EQ(stats.terms, 120u);
  EXPECT_EQ(stats.multiplications_factor, 600u);
  EXPECT_EQ(stats.multiplications_chained, 480u);
  EXPECT_EQ(stats.additions, 119u);
}

}  // namespace
}  // namespace sarrus
