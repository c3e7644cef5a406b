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

#include <gtest/gtest.h>

#include "sarrus/bench.hpp"
#include "sarrus/error.hpp"

namespace sarrus {
namespace {

TEST(Bench, TermCountsMatchLeibniz) {
  const auto reports = bench::bench({"scheme", "scheme-f64", "leibniz", "cofactor", "bareiss"}, {4, 5}, 3, 7);
  ASSERT_EQ(reports.size(), 10u);
  for (const auto& r : reports) {
    if (r.method == "scheme" || r.method == "scheme-f64" || r.method == "leibniz") {
      EXPECT_EQ(r.terms, r.n == 4 ? 24u : 120u) << r.method;
      EXPECT_EQ(r.multiplication_count, r.terms * static_cast<std::uint64_t>(r.n)) << r.method;
    }
  }
  for (int n : {4, 5}) {
    std::string checksum;
    for (const auto& r : reports) {
      if (r.n != n) continue;
      if (checksum.empty()) checksum = r.det_checksum;
      EXPECT_EQ(r.det_checksum, checksum) << r.method;
    }
  }
}

TEST(Bench, SchemeNoteStatesReorganization) {
  const auto r = bench::bench({"scheme"}, {4}, 1, 1).front();
  EXPECT_NE(r.note.find("n! = 24"), std::string::npos);
  EXPECT_NE(r.note.find("not an asymptotic improvement"), std::string::npos);
  const auto j = bench::to_json(r);
  for (const char* key : {"method", "n", "multiplication_count", "addition_count", "wall_time_per_run_s",
                          "det_checksum", "note"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(bench::to_json_line(r).find('\n'), std::string::npos);
}

TEST(Bench, GeneratedSchemeSizes) {
  const auto r = bench::bench({"scheme"}, {6}, 1, 1).front();
  EXPECT_EQ(r.terms, 720u);
}

TEST(Bench, Guards) {
  EXPECT_THROW(bench::bench({"leibniz"}, {11}, 1, 1), SizeLimitExceeded);
  EXPECT_THROW(bench::bench({"scheme"}, {9}, 1, 1), SizeLimitExceeded);
  EXPECT_THROW(bench::bench({"nope"}, {4}, 1, 1), InvalidConfig);
  EXPECT_THROW(bench::bench({"bareiss"}, {4}, 0, 1), InvalidConfig);
  EXPECT_NO_THROW(bench::bench({"bareiss"}, {20}, 1, 1));
}

}  // namespace
}  // namespace sarrus
