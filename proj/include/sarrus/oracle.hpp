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

#include <utility>

#include "sarrus/matrix.hpp"
#include "sarrus/scheme.hpp"

// Scheme-free determinant references. None of these share code with the
// scheme evaluator beyond the Matrix type and permutation parity.
namespace sarrus::oracle {

/// Largest n accepted by the factorial-time routines.
inline constexpr int kFactorialLimit = 10;

/// Sum over all of S_n of sign(pi) * prod_r M(r, pi(r)). Throws
/// SizeLimitExceeded for n > kFactorialLimit.
Rational leibniz_det(const Matrix& m, EvalStats* stats = nullptr);

/// Recursive expansion by minors along the first row.
Rational cofactor_det(const Matrix& m, EvalStats* stats = nullptr);

/// Fraction-free elimination. Rational input is scaled row by row to integers
/// first and the result divided back.
Rational bareiss_det(const Matrix& m, EvalStats* stats = nullptr);

/// (sum of products over even permutations, sum over odd permutations).
/// Throws SizeLimitExceeded for n > kFactorialLimit.
std::pair<Rational, Rational> parity_partition_sums(const Matrix& m);

}  // namespace sarrus::oracle
