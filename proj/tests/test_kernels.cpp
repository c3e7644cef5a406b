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

#include <cstring>
#include <random>

#include "sarrus/builtin.hpp"
#include "sarrus/error.hpp"
#include "sarrus/generator.hpp"
#include "sarrus/kernels.hpp"
#include "support/reference.hpp"

namespace sarrus {
namespace {

using kernels::Isa;

std::vector<Isa> available() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
    if (kernels::isa_supported(isa)) out.push_back(isa);
  }
  return out;
}

std::vector<double> random_data(const kernels::DiagonalTable& t, std::size_t batch, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  std::vector<double> data(static_cast<std::size_t>(t.n * t.n) * batch);
  for (auto& v : data) v = d(rng);
  return data;
}

TEST(Kernels, ScalarIsAlwaysSupported) {
  EXPECT_TRUE(kernels::isa_supported(Isa::scalar));
  EXPECT_TRUE(kernels::isa_supported(kernels::best_isa()));
}

TEST(Kernels, TableMatchesPlan) {
  const EvaluationPlan plan(builtin::scheme_4x4());
  const auto t = kernels::make_table(plan);
  EXPECT_EQ(t.term_count(), 24u);
  EXPECT_EQ(t.cells.size(), 24u * 4u);
  std::size_t neg = 0;
  for (auto v : t.negative) neg += v;
  EXPECT_EQ(neg, 12u);
}

// Every variant accumulates in table order with plain add/sub, so results
// must agree bit for bit, including odd batch sizes that exercise tails.
TEST(Kernels, VariantsAreBitwiseIdentical) {
  std::mt19937_64 rng(41);
  std::vector<Scheme> schemes{builtin::scheme_4x4(), builtin::scheme_5x5()};
  generator::SearchConfig cfg;
  cfg.n = 6;
  schemes.push_back(generator::search_scheme(cfg));
  for (const auto& sch : schemes) {
    const auto t = kernels::make_table(EvaluationPlan(sch));
    for (std::size_t batch : {1u, 3u, 4u, 5u, 7u, 8u, 9u, 13u, 16u, 31u, 64u}) {
      const auto data = random_data(t, batch, rng);
      std::vector<double> ref(batch);
      kernels::signed_diagonal_sums(Isa::scalar, t, data, batch, ref);
      for (Isa isa : available()) {
        std::vector<double> got(batch);
        kernels::signed_diagonal_sums(isa, t, data, batch, got);
        ASSERT_EQ(std::memcmp(ref.data(), got.data(), batch * sizeof(double)), 0)
            << kernels::to_string(isa) << " batch " << batch;
      }
    }
  }
}

TEST(Kernels, IntegerMatricesAreExact) {
  std::mt19937_64 rng(42);
  for (int n : {4, 5}) {
    const EvaluationPlan plan(builtin::for_size(n));
    std::vector<Matrix> ms;
    std::vector<long long> want;
    for (int i = 0; i < 37; ++i) {
      const auto im = testing::random_int_matrix(n, rng);
      ms.push_back(testing::to_matrix(im));
      want.push_back(testing::brute_det(im));
    }
    for (Isa isa : available()) {
      const auto got = kernels::evaluate_batch(plan, ms, isa);
      for (std::size_t i = 0; i < ms.size(); ++i) {
        ASSERT_EQ(got[i], static_cast<double>(want[i])) << kernels::to_string(isa);
      }
    }
  }
}

TEST(Kernels, Interleave) {
  const std::vector<std::vector<double>> ms{{1, 2, 3, 4}, {5, 6, 7, 8}};
  EXPECT_EQ(kernels::interleave(ms, 2), (std::vector<double>{1, 5, 2, 6, 3, 7, 4, 8}));
}

TEST(Kernels, Errors) {
  const EvaluationPlan plan(builtin::scheme_4x4());
  const auto t = kernels::make_table(plan);
  std::vector<double> data(16), out(2);
  EXPECT_THROW(kernels::signed_diagonal_sums(Isa::scalar, t, data, 2, out), SizeMismatch);
  std::vector<Matrix> wrong{Matrix::identity(3)};
  EXPECT_THROW(kernels::evaluate_batch(plan, wrong, Isa::scalar), SizeMismatch);
  for (Isa isa : {Isa::avx2, Isa::neon}) {
    if (!kernels::isa_supported(isa)) {
      std::vector<double> one(16), res(1);
      EXPECT_THROW(kernels::signed_diagonal_sums(isa, t, one, 1, res), UnsupportedSize);
    }
  }
}

}  // namespace
}  // namespace sarrus
