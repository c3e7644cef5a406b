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

#include "sarrus/builtin.hpp"

#include "sarrus/error.hpp"

namespace sarrus::builtin {

Scheme classic_sarrus(int n) {
  if (n == 2) {
    // The identity block 1,2,1 would hit both terms twice.
    return Scheme{2, {SchemeStrip{2, {1, 2}, {1}}}};
  }
  if (n == 3) {
    Block identity{Permutation::identity(3)};
    return Scheme{3, {expand_block(identity)}};
  }
  throw UnsupportedSize("classic Sarrus exists for n = 2 and n = 3 only, got " +
                        std::to_string(n));
}

Scheme scheme_4x4() {
  SchemeStrip strip{4,
                    {1, 2, 3, 4, 1, 2, 3, 2, 4, 1, 3, 2, 4, 2, 1, 3, 4, 2, 1},
                    {1, 2, 3, 4, 7, 8, 9, 10, 13, 14, 15, 16}};
  return Scheme{4, {std::move(strip)}};
}

std::vector<Permutation> p_block_heads() {
  return {
      Permutation{1, 2, 3, 4, 5}, Permutation{4, 3, 5, 2, 1}, Permutation{2, 5, 1, 3, 4},
      Permutation{3, 1, 4, 5, 2}, Permutation{5, 4, 2, 1, 3}, Permutation{1, 4, 2, 3, 5},
  };
}

std::vector<Permutation> n_block_heads() {
  std::vector<Permutation> heads;
  for (const auto& h : p_block_heads()) heads.push_back(relabel_values(h, 3, 4));
  return heads;
}

namespace {

SchemeStrip quilt(const std::vector<Permutation>& heads) {
  std::vector<Block> blocks;
  blocks.reserve(heads.size());
  for (const auto& h : heads) blocks.push_back(Block{h});
  return stitch_blocks(blocks);
}

}  // namespace

Scheme scheme_5x5() { return Scheme{5, {quilt(p_block_heads()), quilt(n_block_heads())}}; }

Scheme for_size(int n) {
  switch (n) {
    case 2:
    case 3:
      return classic_sarrus(n);
    case 4:
      return scheme_4x4();
    case 5:
      return scheme_5x5();
    default:
      throw UnsupportedSize("no built-in scheme for n = " + std::to_string(n) +
                            " (built-ins cover 2..5; use the generator)");
  }
}

}  // namespace sarrus::builtin
