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

#include "sarrus/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "sarrus/error.hpp"

namespace sarrus {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const auto n = images_.size();
  if (n == 0) throw InvalidPermutation("permutation must have at least one element");
  std::vector<bool> seen(n + 1, false);
  for (int v : images_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) {
      throw InvalidPermutation("not a bijection on {1.." + std::to_string(n) +
                               "}: " + std::to_string(v));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw InvalidPermutation("identity needs n >= 1");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

namespace detail {

Sign parity_of(std::span<const int> images) {
  // A cycle of length L contributes L - 1 transpositions.
  const auto n = images.size();
  std::vector<bool> visited(n, false);
  std::size_t transpositions = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::size_t length = 0;
    for (std::size_t i = start; !visited[i]; i = static_cast<std::size_t>(images[i] - 1)) {
      visited[i] = true;
      ++length;
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 0 ? Sign::plus : Sign::minus;
}

}  // namespace detail

Sign parity(const Permutation& p) { return detail::parity_of(p.images()); }

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw SizeMismatch("compose: sizes " + std::to_string(p.size()) + " and " +
                       std::to_string(q.size()));
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(p.size()));
  for (int v : q.images()) out.push_back(p(v));
  return Permutation(std::move(out));
}

Permutation reverse(const Permutation& p) {
  std::vector<int> out(p.images().rbegin(), p.images().rend());
  return Permutation(std::move(out));
}

Permutation cyclic_shift(const Permutation& p, long long k) {
  const long long n = p.size();
  const long long shift = ((k % n) + n) % n;
  std::vector<int> out(p.images().begin(), p.images().end());
  std::rotate(out.begin(), out.begin() + shift, out.end());
  return Permutation(std::move(out));
}

Permutation relabel_values(const Permutation& p, int a, int b) {
  const int n = p.size();
  if (a < 1 || a > n || b < 1 || b > n) {
    throw IndexOutOfRange("relabel_values: values must lie in 1.." + std::to_string(n));
  }
  std::vector<int> out(p.images().begin(), p.images().end());
  for (int& v : out) {
    if (v == a) {
      v = b;
    } else if (v == b) {
      v = a;
    }
  }
  return Permutation(std::move(out));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> out(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) out[static_cast<std::size_t>(p(i) - 1)] = i;
  return Permutation(std::move(out));
}

std::string to_string(const Permutation& p) {
  std::string s = "(";
  bool first = true;
  for (int v : p.images()) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  s += ')';
  return s;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << to_string(p); }

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw SizeLimitExceeded(std::to_string(n) + "! does not fit in 64 bits");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t lex_rank(const Permutation& p) {
  // Lehmer code; O(n^2) is fine for the n <= 10 tables this feeds.
  const auto images = p.images();
  const int n = p.size();
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (int j = i + 1; j < n; ++j) {
      if (images[static_cast<std::size_t>(j)] < images[static_cast<std::size_t>(i)]) ++smaller;
    }
    rank += smaller * factorial(n - 1 - i);
  }
  return rank;
}

Permutation lex_unrank(int n, std::uint64_t rank) {
  if (rank >= factorial(n)) throw IndexOutOfRange("lex_unrank: rank out of range");
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(pool.size());
  for (int i = n - 1; i >= 0; --i) {
    const std::uint64_t f = factorial(i);
    const auto idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(std::move(out));
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  do {
    visit(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace sarrus
