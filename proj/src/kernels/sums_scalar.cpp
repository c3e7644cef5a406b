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

#include "sarrus/kernels.hpp"

namespace sarrus::kernels::detail {

// Reference kernel. The SIMD variants must match it bit for bit.
void sums_scalar(const DiagonalTable& table, const double* data, std::size_t batch, double* out) {
  const auto n = static_cast<std::size_t>(table.n);
  const std::size_t terms = table.term_count();
  const std::uint32_t* cells = table.cells.data();
  for (std::size_t b = 0; b < batch; ++b) {
    double acc = 0.0;
    for (std::size_t t = 0; t < terms; ++t) {
      const std::uint32_t* row = cells + t * n;
      double prod = data[row[0] * batch + b];
      for (std::size_t r = 1; r < n; ++r) prod *= data[row[r] * batch + b];
      if (table.negative[t] != 0) {
        acc -= prod;
      } else {
        acc += prod;
      }
    }
    out[b] = acc;
  }
}

}  // namespace sarrus::kernels::detail
