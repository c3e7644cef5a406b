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
#include <limits>
#include <string>
#include <vector>

#include "sarrus/scheme.hpp"

namespace sarrus::generator {

/// Parity of the descending shifts of a class representative.
enum class ParityProfile { uniform_plus, uniform_minus, alternating };

std::string to_string(ParityProfile p);

/// All cyclic shifts of a permutation together with all cyclic shifts of its
/// reversal. One expanded block covers exactly one full-size class.
struct NecklaceClass {
  /// Lexicographically smallest member.
  Permutation representative;
  /// Sorted, distinct.
  std::vector<Permutation> members;
  ParityProfile parity_profile;
  /// Reversed members carry the opposite sign to the representative's shifts
  /// (floor(n/2) odd).
  bool reversal_flips;

  std::size_t size() const noexcept { return members.size(); }
  bool full_size() const noexcept {
    return members.size() == 2 * static_cast<std::size_t>(representative.size());
  }
};

/// Partition of S_n into necklace classes, ordered by representative.
/// Requires 2 <= n <= 8 (SizeTooSmall / SizeLimitExceeded).
std::vector<NecklaceClass> necklace_classes(int n);

struct SearchConfig {
  int n = 4;
  int max_blocks_per_strip = std::numeric_limits<int>::max();
  double time_limit_seconds = 60.0;
  std::uint64_t random_seed = 0;
  /// When false, a self-symmetric class (fewer than 2n members) is covered by
  /// a block that keeps only one start from each reverse-related pair.
  bool require_full_size_classes = true;
};

/// Finds a scheme covering S_n exactly once, built from chained blocks with
/// one head per necklace class. When every class is parity-uniform (n = 1 mod
/// 4) the even and odd classes go to separate strips, like the 5x5 quilts;
/// otherwise one strip covers everything unless max_blocks_per_strip forces a
/// break. The result depends only on the config.
///
/// Throws NotFound (time limit, exhausted search, or self-symmetric classes
/// while require_full_size_classes), InvalidConfig, SizeTooSmall,
/// SizeLimitExceeded.
Scheme search_scheme(const SearchConfig& cfg);

struct VerificationReport {
  ValidationReport validation;
  std::size_t samples_checked = 0;
};

/// Validates the scheme, then compares evaluate() against the Bareiss oracle
/// on `sample_count` seeded random integer matrices with entries in [-9, 9].
/// Agreement on the identity matrix alone proves nothing: any scheme whose
/// windows include the identity permutation once evaluates it to 1.
/// Throws VerificationFailed describing the first failure.
VerificationReport verify_generated(const Scheme& sch, std::size_t sample_count,
                                    std::uint64_t seed = 1);

}  // namespace sarrus::generator
