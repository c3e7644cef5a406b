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
#include <string>
#include <vector>

#include "json.hpp"

#include "sarrus/kernels.hpp"

namespace sarrus::bench {

/// "scheme", "scheme-f64", "leibniz", "cofactor", "bareiss".
const std::vector<std::string>& known_methods();

struct BenchReport {
  std::string method;
  int n = 0;
  int runs = 0;
  /// Signed products expanded (n! for the scheme and Leibniz; leaf products
  /// for cofactor; 0 for elimination).
  std::uint64_t terms = 0;
  /// Every factor of every product counted.
  std::uint64_t multiplication_count = 0;
  /// Products built with n - 1 multiplications each.
  std::uint64_t multiplication_count_chained = 0;
  std::uint64_t addition_count = 0;
  double wall_time_per_run_seconds = 0.0;
  /// Sum of the determinants over all runs, as an exact rational for exact
  /// methods; methods agree iff their checksums do.
  std::string det_checksum;
  std::string note;
};

/// Times each method on `runs` seeded random integer matrices (entries in
/// [-9, 9]) per size. The scheme method uses the built-in scheme for n <= 5
/// and a generated one (seeded) up to n = 8. Throws SizeLimitExceeded when a
/// size is outside a method's guard, InvalidConfig for unknown methods or
/// runs < 1.
std::vector<BenchReport> bench(const std::vector<std::string>& methods, const std::vector<int>& sizes,
                               int runs, std::uint64_t seed,
                               kernels::Isa isa = kernels::best_isa());

/// One JSON object (single line, no trailing newline).
std::string to_json_line(const BenchReport& r);
nlohmann::json to_json(const BenchReport& r);

}  // namespace sarrus::bench
