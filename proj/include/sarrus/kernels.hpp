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
#include <string_view>
#include <vector>

#include "sarrus/scheme.hpp"

// Double-precision evaluation of a scheme over many matrices at once. This is
// the fast approximate path: no exactness guarantee once products or partial
// sums leave the range of exactly representable integers (|x| > 2^53), and no
// error bound for non-integral input. Use EvaluationPlan::evaluate for
// exact results.
namespace sarrus::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view to_string(Isa isa);

/// Compiled in and supported by the running CPU.
bool isa_supported(Isa isa);

/// Widest supported variant.
Isa best_isa();

/// A plan's terms flattened for the kernels. For term t and row r (both
/// 0-based), cells[t * n + r] is the row-major cell index r * n + c of the
/// entry that row contributes; negative[t] is 1 for odd terms.
struct DiagonalTable {
  int n = 0;
  std::vector<std::uint32_t> cells;
  std::vector<std::uint8_t> negative;

  std::size_t term_count() const noexcept { return negative.size(); }
};

DiagonalTable make_table(const EvaluationPlan& plan);

/// Lane-interleaved batch: cell k of matrix b lives at data[k * batch + b].
/// Each matrix is given row-major with n * n doubles.
std::vector<double> interleave(std::span<const std::vector<double>> matrices, int n);

/// out[b] = sum over terms of +/- the product of the term's cells in matrix
/// b. Terms are accumulated in table order and each product multiplies rows
/// top to bottom, so every variant produces bit-identical results.
/// Throws SizeMismatch on inconsistent spans, UnsupportedSize for an
/// unavailable ISA.
void signed_diagonal_sums(Isa isa, const DiagonalTable& table, std::span<const double> data,
                          std::size_t batch, std::span<double> out);

/// Interleaves, runs the chosen kernel, returns one value per matrix.
std::vector<double> evaluate_batch(const EvaluationPlan& plan, std::span<const Matrix> matrices,
                                   Isa isa = best_isa());

namespace detail {
void sums_scalar(const DiagonalTable& table, const double* data, std::size_t batch, double* out);
#if defined(SARRUS_HAVE_AVX2)
void sums_avx2(const DiagonalTable& table, const double* data, std::size_t batch, double* out);
#endif
#if defined(SARRUS_HAVE_NEON)
void sums_neon(const DiagonalTable& table, const double* data, std::size_t batch, double* out);
#endif
}  // namespace detail

}  // namespace sarrus::kernels
