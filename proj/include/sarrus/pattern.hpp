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

#include <string>
#include <vector>

#include "sarrus/permutation.hpp"

namespace sarrus::pattern {

/// Sizes fall into four families by n mod 4, written 4k+2 .. 4k+5.
enum class ResidueClass { k4_plus_2, k4_plus_3, k4_plus_4, k4_plus_5 };

std::string to_string(ResidueClass r);

/// Sign structure of the basic strip (identity block) for one size.
struct PatternClass {
  int n;
  ResidueClass residue_class;
  /// Descending signs alternate along consecutive starts (n even).
  bool shift_alternates;
  /// The ascending diagonal at a start has the opposite sign to the
  /// descending one (floor(n/2) odd).
  bool ascending_flips;

  /// Same booleans; n and residue may differ.
  bool same_structure(const PatternClass& o) const noexcept {
    return shift_alternates == o.shift_alternates && ascending_flips == o.ascending_flips;
  }
};

/// Throws SizeTooSmall for n < 2.
PatternClass classify(int n);

struct StartSigns {
  int start;
  Sign descending;
  Sign ascending;

  bool operator==(const StartSigns&) const = default;
};

/// Signs at starts 1..n of columns 1..n,1..n-1: descending (-1)^((p-1)(n-1)),
/// ascending that times (-1)^floor(n/2). Throws SizeTooSmall for n < 2.
std::vector<StartSigns> basic_strip_signs(int n);

}  // namespace sarrus::pattern
