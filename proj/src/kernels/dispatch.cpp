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

#include "sarrus/error.hpp"
#include "sarrus/kernels.hpp"

namespace sarrus::kernels {

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "?";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(SARRUS_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
    case Isa::neon:
#if defined(SARRUS_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() {
  if (isa_supported(Isa::avx2)) return Isa::avx2;
  if (isa_supported(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

DiagonalTable make_table(const EvaluationPlan& plan) {
  DiagonalTable table;
  table.n = plan.size();
  const auto n = static_cast<std::uint32_t>(plan.size());
  table.cells.reserve(plan.terms().size() * n);
  table.negative.reserve(plan.terms().size());
  for (const auto& term : plan.terms()) {
    for (std::uint32_t r = 0; r < n; ++r) {
      const auto c = static_cast<std::uint32_t>(term.columns(static_cast<int>(r) + 1) - 1);
      table.cells.push_back(r * n + c);
    }
    table.negative.push_back(term.sign == Sign::minus ? 1 : 0);
  }
  return table;
}

std::vector<double> interleave(std::span<const std::vector<double>> matrices, int n) {
  const std::size_t cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  const std::size_t batch = matrices.size();
  std::vector<double> data(cells * batch);
  for (std::size_t b = 0; b < batch; ++b) {
    if (matrices[b].size() != cells) throw SizeMismatch("interleave: matrix has wrong entry count");
    for (std::size_t k = 0; k < cells; ++k) data[k * batch + b] = matrices[b][k];
  }
  return data;
}

void signed_diagonal_sums(Isa isa, const DiagonalTable& table, std::span<const double> data,
                          std::size_t batch, std::span<double> out) {
  const std::size_t cells = static_cast<std::size_t>(table.n) * static_cast<std::size_t>(table.n);
  if (data.size() != cells * batch || out.size() != batch) {
    throw SizeMismatch("signed_diagonal_sums: data or output span does not match the batch");
  }
  if (!isa_supported(isa)) {
    throw UnsupportedSize(std::string("kernel variant '") + std::string(to_string(isa)) +
                          "' is not available on this machine");
  }
  if (batch == 0) return;
  switch (isa) {
    case Isa::scalar:
      detail::sums_scalar(table, data.data(), batch, out.data());
      return;
    case Isa::avx2:
#if defined(SARRUS_HAVE_AVX2)
      detail::sums_avx2(table, data.data(), batch, out.data());
#endif
      return;
    case Isa::neon:
#if defined(SARRUS_HAVE_NEON)
      detail::sums_neon(table, data.data(), batch, out.data());
#endif
      return;
  }
}

std::vector<double> evaluate_batch(const EvaluationPlan& plan, std::span<const Matrix> matrices,
                                   Isa isa) {
  std::vector<std::vector<double>> rows;
  rows.reserve(matrices.size());
  for (const auto& m : matrices) {
    if (m.size() != plan.size()) throw SizeMismatch("evaluate_batch: matrix size differs from scheme");
    rows.push_back(m.to_doubles());
  }
  const auto data = interleave(rows, plan.size());
  std::vector<double> out(matrices.size());
  signed_diagonal_sums(isa, make_table(plan), data, matrices.size(), out);
  return out;
}

}  // namespace sarrus::kernels
