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

#include <vector>

#include "sarrus/scheme.hpp"

namespace sarrus::builtin {

/// Rule of Sarrus. n = 3: columns 1,2,3,1,2 with starts 1..3. n = 2: columns
/// 1,2 with the single start 1, whose descending and ascending diagonals are
/// exactly the two terms of a 2x2 determinant. Throws UnsupportedSize.
Scheme classic_sarrus(int n);

/// The 19-column 4x4 arrangement 1-2-3-4-1-2-3-2-4-1-3-2-4-2-1-3-4-2-1:
/// three chained 7-column blocks with heads (1,2,3,4), (3,2,4,1), (4,2,1,3).
Scheme scheme_4x4();

/// Heads of the six blocks whose diagonals are the 60 even terms of a 5x5
/// determinant. Consecutive blocks chain: each head starts with the last
/// column of the previous expanded block.
std::vector<Permutation> p_block_heads();

/// The P heads with values 3 and 4 swapped; their diagonals are the 60 odd terms.
std::vector<Permutation> n_block_heads();

/// Two 49-column quilts: the stitched P blocks, then the stitched N blocks.
Scheme scheme_5x5();

/// classic_sarrus for n = 2, 3; scheme_4x4 / scheme_5x5 for 4, 5.
/// Throws UnsupportedSize otherwise.
Scheme for_size(int n);

}  // namespace sarrus::builtin
