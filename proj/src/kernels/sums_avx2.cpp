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

#include <immintrin.h>

#include "sarrus/kernels.hpp"

namespace sarrus::kernels::detail {

// Four matrices per 256-bit lane group; leftovers go through the scalar loop
// with the same operation order.
void sums_avx2(const DiagonalTable& table, const double* data, std::size_t batch, double* out) {
  const auto n = static_cast<std::size_t>(table.n);
  const std::size_t terms = table.term_count();
  const std::uint32_t* cells = table.cells.data();
  const std::uint8_t* negative = table.negative.data();

  std::size_t b = 0;
  for (; b + 8 <= batch; b += 8) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    for (std::size_t t = 0; t < terms; ++t) {
      const std::uint32_t* row = cells + t * n;
      const double* base = data + row[0] * batch + b;
      __m256d p0 = _mm256_loadu_pd(base);
      __m256d p1 = _mm256_loadu_pd(base + 4);
      for (std::size_t r = 1; r < n; ++r) {
        const double* src = data + row[r] * batch + b;
        p0 = _mm256_mul_pd(p0, _mm256_loadu_pd(src));
        p1 = _mm256_mul_pd(p1, _mm256_loadu_pd(src + 4));
      }
      if (negative[t] != 0) {
        acc0 = _mm256_sub_pd(acc0, p0);
        acc1 = _mm256_sub_pd(acc1, p1);
      } else {
        acc0 = _mm256_add_pd(acc0, p0);
        acc1 = _mm256_add_pd(acc1, p1);
      }
    }
    _mm256_storeu_pd(out + b, acc0);
    _mm256_storeu_pd(out + b + 4, acc1);
  }
  for (; b + 4 <= batch; b += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t t = 0; t < terms; ++t) {
      const std::uint32_t* row = cells + t * n;
      __m256d p = _mm256_loadu_pd(data + row[0] * batch + b);
      for (std::size_t r = 1; r < n; ++r) p = _mm256_mul_pd(p, _mm256_loadu_pd(data + row[r] * batch + b));
      acc = negative[t] != 0 ? _mm256_sub_pd(acc, p) : _mm256_add_pd(acc, p);
    }
    _mm256_storeu_pd(out + b, acc);
  }
  for (; b < batch; ++b) {
    double acc = 0.0;
    for (std::size_t t = 0; t < terms; ++t) {
      const std::uint32_t* row = cells + t * n;
      double prod = data[row[0] * batch + b];
      for (std::size_t r = 1; r < n; ++r) prod *= data[row[r] * batch + b];
      if (negative[t] != 0) {
        acc -= prod;
      } else {
        acc += prod;
      }
    }
    out[b] = acc;
  }
}

}  // namespace sarrus::kernels::detail
