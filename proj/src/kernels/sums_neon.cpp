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

#include <arm_neon.h>

#include "sarrus/kernels.hpp"

namespace sarrus::kernels::detail {

// Two matrices per 128-bit register.
void sums_neon(const DiagonalTable& table, const double* data, std::size_t batch, double* out) {
  const auto n = static_cast<std::size_t>(table.n);
  const std::size_t terms = table.term_count();
  const std::uint32_t* cells = table.cells.data();
  const std::uint8_t* negative = table.negative.data();

  std::size_t b = 0;
  for (; b + 2 <= batch; b += 2) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t t = 0; t < terms; ++t) {
      const std::uint32_t* row = cells + t * n;
      float64x2_t p = vld1q_f64(data + row[0] * batch + b);
      for (std::size_t r = 1; r < n; ++r) p = vmulq_f64(p, vld1q_f64(data + row[r] * batch + b));
      acc = negative[t] != 0 ? vsubq_f64(acc, p) : vaddq_f64(acc, p);
    }
    vst1q_f64(out + b, acc);
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
