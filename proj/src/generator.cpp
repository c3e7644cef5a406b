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

#include "sarrus/generator.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "sarrus/error.hpp"
#include "sarrus/oracle.hpp"

namespace sarrus::generator {

std::string to_string(ParityProfile p) {
  switch (p) {
    case ParityProfile::uniform_plus:
      return "uniform(+)";
    case ParityProfile::uniform_minus:
      return "uniform(-)";
    case ParityProfile::alternating:
      return "alternating";
  }
  return "?";
}

std::vector<NecklaceClass> necklace_classes(int n) {
  if (n < 2) throw SizeTooSmall("necklace_classes: n must be at least 2");
  if (n > 8) throw SizeLimitExceeded("necklace_classes: n must be at most 8");

  std::vector<bool> visited(factorial(n), false);
  std::vector<NecklaceClass> out;
  // Lexicographic iteration means the first unvisited permutation is the
  // smallest member of its class.
  for_each_permutation(n, [&](const Permutation& p) {
    if (visited[lex_rank(p)]) return;
    std::set<Permutation> members;
    for (const auto& base : {p, reverse(p)}) {
      for (int k = 0; k < n; ++k) members.insert(cyclic_shift(base, k));
    }
    for (const auto& m : members) visited[lex_rank(m)] = true;

    ParityProfile profile = ParityProfile::alternating;
    if (n % 2 == 1) {
      profile = parity(p) == Sign::plus ? ParityProfile::uniform_plus : ParityProfile::uniform_minus;
    }
    out.push_back(NecklaceClass{p, {members.begin(), members.end()}, profile, (n / 2) % 2 == 1});
  });
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Choice {
  int cls;
  const Permutation* head;
};

// Starts of the block with this head whose windows are not already produced
// by an earlier start of the same block. Full-size classes keep all n.
std::vector<bool> block_starts(const Permutation& head) {
  const int n = head.size();
  std::set<Permutation> seen;
  std::vector<bool> keep(static_cast<std::size_t>(n), false);
  for (int j = 0; j < n; ++j) {
    Permutation desc = cyclic_shift(head, j);
    Permutation asc = reverse(desc);
    if (seen.contains(desc) || seen.contains(asc)) continue;
    keep[static_cast<std::size_t>(j)] = true;
    seen.insert(std::move(desc));
    seen.insert(std::move(asc));
  }
  return keep;
}

class ChainSearch {
 public:
  ChainSearch(std::vector<const NecklaceClass*> classes, int max_blocks, Clock::time_point deadline,
              std::mt19937_64& rng)
      : classes_(std::move(classes)), max_blocks_(max_blocks), deadline_(deadline) {
    const int n = classes_.front()->representative.size();
    priority_.resize(classes_.size());
    for (std::size_t i = 0; i < priority_.size(); ++i) priority_[i] = static_cast<int>(i);
    std::shuffle(priority_.begin(), priority_.end(), rng);

    by_first_.resize(classes_.size());
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      by_first_[c].resize(static_cast<std::size_t>(n) + 1);
      for (const auto& m : classes_[c]->members) by_first_[c][static_cast<std::size_t>(m(1))].push_back(&m);
      for (auto& heads : by_first_[c]) std::shuffle(heads.begin(), heads.end(), rng);
    }
    used_.assign(classes_.size(), false);
  }

  std::vector<Choice> run() {
    std::vector<std::vector<Choice>> options;
    std::vector<std::size_t> next;
    options.push_back(options_for());
    next.push_back(0);
    std::uint64_t nodes = 0;
    while (!options.empty()) {
      if (++nodes % 256 == 0 && Clock::now() > deadline_) {
        throw NotFound("time limit reached after " + std::to_string(nodes) + " search nodes");
      }
      if (next.back() == options.back().size()) {
        options.pop_back();
        next.pop_back();
        if (!path_.empty()) {
          used_[static_cast<std::size_t>(path_.back().cls)] = false;
          path_.pop_back();
        }
        continue;
      }
      const Choice ch = options.back()[next.back()++];
      path_.push_back(ch);
      used_[static_cast<std::size_t>(ch.cls)] = true;
      if (path_.size() == classes_.size()) return path_;
      options.push_back(options_for());
      next.push_back(0);
    }
    throw NotFound("search exhausted without linking every class");
  }

 private:
  std::vector<Choice> options_for() const {
    std::vector<Choice> out;
    const bool strip_start = path_.size() % static_cast<std::size_t>(max_blocks_) == 0;
    if (strip_start) {
      // A fresh strip has no link constraint; open it with the first unused
      // class in seeded priority order.
      for (int c : priority_) {
        if (used_[static_cast<std::size_t>(c)]) continue;
        for (const auto& heads : by_first_[static_cast<std::size_t>(c)]) {
          for (const auto* h : heads) out.push_back(Choice{c, h});
        }
        return out;
      }
      return out;
    }
    const int link = last_column(Block{*path_.back().head});
    // Most constrained class first: fewest heads that can follow the link.
    std::vector<std::pair<std::size_t, int>> ranked;
    for (int c : priority_) {
      if (used_[static_cast<std::size_t>(c)]) continue;
      const auto count = by_first_[static_cast<std::size_t>(c)][static_cast<std::size_t>(link)].size();
      if (count == 0) return {};  // this class can never be reached from here
      ranked.emplace_back(count, c);
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [count, c] : ranked) {
      for (const auto* h : by_first_[static_cast<std::size_t>(c)][static_cast<std::size_t>(link)]) {
        out.push_back(Choice{c, h});
      }
    }
    return out;
  }

  std::vector<const NecklaceClass*> classes_;
  int max_blocks_;
  Clock::time_point deadline_;
  std::vector<int> priority_;
  std::vector<std::vector<std::vector<const Permutation*>>> by_first_;
  std::vector<bool> used_;
  std::vector<Choice> path_;
};

SchemeStrip assemble_strip(std::span<const Choice> chain) {
  std::vector<Block> blocks;
  blocks.reserve(chain.size());
  for (const auto& ch : chain) blocks.push_back(Block{*ch.head});
  SchemeStrip strip = stitch_blocks(blocks);
  const auto n = static_cast<std::size_t>(blocks.front().head.size());
  std::vector<int> starts;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto keep = block_starts(blocks[b].head);
    for (std::size_t j = 0; j < n; ++j) {
      if (keep[j]) starts.push_back(strip.starts[b * n + j]);
    }
  }
  strip.starts = std::move(starts);
  return strip;
}

}  // namespace

Scheme search_scheme(const SearchConfig& cfg) {
  if (cfg.n < 2) throw SizeTooSmall("search_scheme: n must be at least 2");
  if (cfg.n > 8) throw SizeLimitExceeded("search_scheme: n must be at most 8");
  if (cfg.max_blocks_per_strip < 1) throw InvalidConfig("max_blocks_per_strip must be positive");
  if (!(cfg.time_limit_seconds > 0)) throw InvalidConfig("time limit must be positive");

  const auto deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(cfg.time_limit_seconds));
  const auto classes = necklace_classes(cfg.n);

  const auto small = std::count_if(classes.begin(), classes.end(),
                                   [](const NecklaceClass& c) { return !c.full_size(); });
  if (small > 0 && cfg.require_full_size_classes) {
    throw NotFound("n = " + std::to_string(cfg.n) + " has " + std::to_string(small) +
                   " self-symmetric necklace class(es) that a full block would cover twice");
  }

  // Parity-split strips only when every class is parity-uniform.
  const bool uniform = std::all_of(classes.begin(), classes.end(), [](const NecklaceClass& c) {
    return c.parity_profile != ParityProfile::alternating && !c.reversal_flips;
  });
  std::vector<std::vector<const NecklaceClass*>> groups;
  if (uniform) {
    groups.resize(2);
    for (const auto& c : classes) {
      groups[c.parity_profile == ParityProfile::uniform_plus ? 0 : 1].push_back(&c);
    }
  } else {
    groups.emplace_back();
    for (const auto& c : classes) groups.back().push_back(&c);
  }

  std::mt19937_64 rng(cfg.random_seed);
  Scheme sch{cfg.n, {}};
  for (const auto& group : groups) {
    if (group.empty()) continue;
    ChainSearch search(group, cfg.max_blocks_per_strip, deadline, rng);
    const auto chain = search.run();
    const auto per_strip = static_cast<std::size_t>(cfg.max_blocks_per_strip);
    for (std::size_t i = 0; i < chain.size(); i += per_strip) {
      const auto len = std::min(per_strip, chain.size() - i);
      sch.strips.push_back(assemble_strip(std::span(chain).subspan(i, len)));
    }
  }

  if (!validate(sch).valid()) {
    throw Error("search_scheme produced a scheme that fails validation (n = " +
                std::to_string(cfg.n) + ")");
  }
  return sch;
}

VerificationReport verify_generated(const Scheme& sch, std::size_t sample_count,
                                    std::uint64_t seed) {
  VerificationReport rep;
  rep.validation = validate(sch);
  if (!rep.validation.valid()) {
    std::string detail;
    if (!rep.validation.invalid_windows.empty()) {
      const auto& w = rep.validation.invalid_windows.front();
      detail = "invalid window at strip " + std::to_string(w.strip) + " start " +
               std::to_string(w.start);
    } else if (!rep.validation.duplicates.empty()) {
      detail = "permutation " + sarrus::to_string(rep.validation.duplicates.front().first) +
               " covered more than once";
    } else if (!rep.validation.missing.empty()) {
      detail = "permutation " + sarrus::to_string(rep.validation.missing.front()) + " not covered";
    } else {
      detail = std::to_string(rep.validation.missing_count) + " permutations not covered";
    }
    throw VerificationFailed("validation failed: " + detail);
  }

  const EvaluationPlan plan(sch);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-9, 9);
  const int n = sch.n;
  for (std::size_t s = 0; s < sample_count; ++s) {
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(n));
    for (auto& row : rows) {
      for (int c = 0; c < n; ++c) row.emplace_back(entry(rng));
    }
    const Matrix m(std::move(rows));
    const Rational got = plan.evaluate(m);
    const Rational want = oracle::bareiss_det(m);
    if (got != want) {
      throw VerificationFailed("sample " + std::to_string(s) + ": scheme gives " +
                               got.get_str() + ", oracle gives " + want.get_str());
    }
    ++rep.samples_checked;
  }
  return rep;
}

}  // namespace sarrus::generator
