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

#include "sarrus/pattern.hpp"

#include "sarrus/error.hpp"

namespace sarrus::pattern {

std::string to_string(ResidueClass r) {
  switch (r) {
    case ResidueClass::k4_plus_2:
      return "4k+2";
    case ResidueClass::k4_plus_3:
      return "4k+3";
    case ResidueClass::k4_plus_4:
      return "4k+4";
    case ResidueClass::k4_plus_5:
      return "4k+5";
  }
  return "?";
}

PatternClass classify(int n) {
  if (n < 2) throw SizeTooSmall("pattern classes start at n = 2, got " + std::to_string(n));
  static constexpr ResidueClass by_mod[4] = {ResidueClass::k4_plus_4, ResidueClass::k4_plus_5,
                                             ResidueClass::k4_plus_2, ResidueClass::k4_plus_3};
  return PatternClass{n, by_mod[n % 4], n % 2 == 0, (n / 2) % 2 == 1};
}

std::vector<StartSigns> basic_strip_signs(int n) {
  const PatternClass cls = classify(n);
  std::vector<StartSigns> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) {
    const Sign desc = (cls.shift_alternates && (p - 1) % 2 == 1) ? Sign::minus : Sign::plus;
    const Sign asc = cls.ascending_flips ? -desc : desc;
    out.push_back(StartSigns{p, desc, asc});
  }
  return out;
}

}  // namespace sarrus::pattern
