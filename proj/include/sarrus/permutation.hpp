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

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace sarrus {

/// Sign of a permutation, +1 (even) or -1 (odd).
enum class Sign : int { plus = 1, minus = -1 };

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return static_cast<int>(a) == static_cast<int>(b) ? Sign::plus : Sign::minus;
}
constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::plus ? Sign::minus : Sign::plus;
}
constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr char to_char(Sign s) noexcept { return s == Sign::plus ? '+' : '-'; }

/// A bijection on {1..n}. images()[i] is the image of position i + 1, so the
/// images read left to right are the column ordering (x y z u w) of a
/// diagonal product.
///
/// Values are immutable; every operation returns a new permutation.
class Permutation {
 public:
  /// Throws InvalidPermutation unless `images` holds each of 1..n once, n >= 1.
  explicit Permutation(std::vector<int> images);
  Permutation(std::initializer_list<int> images)
      : Permutation(std::vector<int>(images)) {}

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }

  /// 1-based access: image of position `pos`.
  int operator()(int pos) const { return images_.at(static_cast<std::size_t>(pos - 1)); }
  std::span<const int> images() const noexcept { return images_; }

  bool operator==(const Permutation&) const = default;
  /// Lexicographic on the image sequence.
  std::strong_ordering operator<=>(const Permutation& o) const {
    return images_ <=> o.images_;
  }

 private:
  std::vector<int> images_;
};

Sign parity(const Permutation& p);

namespace detail {
// Parity of a raw 1-based image sequence; caller guarantees it is a bijection.
Sign parity_of(std::span<const int> images);
}  // namespace detail

/// (p o q)(i) = p(q(i)). Throws SizeMismatch.
Permutation compose(const Permutation& p, const Permutation& q);

/// Image sequence read backwards.
Permutation reverse(const Permutation& p);

/// Image sequence rotated left by k (mod n); negative k rotates right.
Permutation cyclic_shift(const Permutation& p, long long k);

/// Swaps the values a and b wherever they occur, i.e. left multiplication by
/// the transposition (a b). Throws IndexOutOfRange.
Permutation relabel_values(const Permutation& p, int a, int b);

Permutation inverse(const Permutation& p);

/// "(4,3,5,2,1)"
std::string to_string(const Permutation& p);
std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// n! as an unsigned 64-bit value; throws SizeLimitExceeded past 20!.
std::uint64_t factorial(int n);

/// Position of p in the lexicographic listing of S_n (0-based).
std::uint64_t lex_rank(const Permutation& p);
Permutation lex_unrank(int n, std::uint64_t rank);

/// Calls `visit` once for every permutation of {1..n} in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);

}  // namespace sarrus

template <>
struct std::hash<sarrus::Permutation> {
  std::size_t operator()(const sarrus::Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.images()) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};
