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

#include "sarrus/bench.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "sarrus/builtin.hpp"
#include "sarrus/error.hpp"
#include "sarrus/generator.hpp"
#include "sarrus/oracle.hpp"

namespace sarrus::bench {

const std::vector<std::string>& known_methods() {
  static const std::vector<std::string> methods = {"scheme", "scheme-f64", "leibniz", "cofactor",
                                                   "bareiss"};
  return methods;
}

namespace {

using Clock = std::chrono::steady_clock;

std::vector<Matrix> random_matrices(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(n)));
  std::uniform_int_distribution<long> entry(-9, 9);
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(n));
    for (auto& row : rows) {
      for (int c = 0; c < n; ++c) row.emplace_back(entry(rng));
    }
    out.emplace_back(std::move(rows));
  }
  return out;
}

Scheme scheme_for(int n, std::uint64_t seed) {
  if (n >= 2 && n <= 5) return builtin::for_size(n);
  if (n > 5 && n <= 8) {
    generator::SearchConfig cfg;
    cfg.n = n;
    cfg.random_seed = seed;
    return generator::search_scheme(cfg);
  }
  throw SizeLimitExceeded("scheme benchmarks cover 2 <= n <= 8, got " + std::to_string(n));
}

void check_guard(const std::string& method, int n) {
  if (n < 1) throw SizeLimitExceeded("matrix size must be positive");
  if ((method == "leibniz" || method == "cofactor") && n > oracle::kFactorialLimit) {
    throw SizeLimitExceeded(method + " is limited to n <= " + std::to_string(oracle::kFactorialLimit));
  }
  if ((method == "scheme" || method == "scheme-f64") && (n < 2 || n > 8)) {
    throw SizeLimitExceeded(method + " is limited to 2 <= n <= 8");
  }
}

template <class F>
BenchReport time_exact(const std::string& method, int n, const std::vector<Matrix>& ms, F&& det) {
  BenchReport r;
  r.method = method;
  r.n = n;
  r.runs = static_cast<int>(ms.size());
  Rational checksum = 0;
  EvalStats first;
  const auto t0 = Clock::now();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    EvalStats stats;
    checksum += det(ms[i], &stats);
    if (i == 0) first = stats;
  }
  const std::chrono::duration<double> elapsed = Clock::now() - t0;
  r.wall_time_per_run_seconds = elapsed.count() / static_cast<double>(ms.size());
  r.terms = first.terms;
  r.multiplication_count = first.multiplications_factor;
  r.multiplication_count_chained = first.multiplications_chained;
  r.addition_count = first.additions;
  r.det_checksum = checksum.get_str();
  return r;
}

}  // namespace

std::vector<BenchReport> bench(const std::vector<std::string>& methods, const std::vector<int>& sizes,
                               int runs, std::uint64_t seed, kernels::Isa isa) {
  if (runs < 1) throw InvalidConfig("runs must be at least 1");
  for (const auto& m : methods) {
    const auto& known = known_methods();
    if (std::find(known.begin(), known.end(), m) == known.end()) {
      throw InvalidConfig("unknown benchmark method '" + m + "'");
    }
    for (int n : sizes) check_guard(m, n);
  }

  std::vector<BenchReport> reports;
  for (int n : sizes) {
    const auto ms = random_matrices(n, runs, seed);
    for (const auto& method : methods) {
      if (method == "scheme" || method == "scheme-f64") {
        const EvaluationPlan plan(scheme_for(n, seed));
        if (method == "scheme") {
          auto r = time_exact(method, n, ms, [&](const Matrix& m, EvalStats* s) { return plan.evaluate(m, s); });
          r.note = "expands exactly n! = " + std::to_string(factorial(n)) +
                   " signed diagonal products, the same terms as the Leibniz expansion: a "
                   "reorganization, not an asymptotic improvement";
          reports.push_back(std::move(r));
        } else {
          BenchReport r;
          r.method = method;
          r.n = n;
          r.runs = runs;
          const auto t0 = Clock::now();
          const auto values = kernels::evaluate_batch(plan, ms, isa);
          const std::chrono::duration<double> elapsed = Clock::now() - t0;
          r.wall_time_per_run_seconds = elapsed.count() / runs;
          r.terms = plan.terms().size();
          r.multiplication_count = r.terms * static_cast<std::uint64_t>(n);
          r.multiplication_count_chained = r.terms * static_cast<std::uint64_t>(n - 1);
          r.addition_count = r.terms - 1;
          double sum = 0.0;
          for (double v : values) sum += v;
          r.det_checksum = std::to_string(static_cast<long long>(sum));
          r.note = "double precision, " + std::string(kernels::to_string(isa)) +
                   " kernel; exact only while every product and partial sum stays below 2^53";
          reports.push_back(std::move(r));
        }
      } else if (method == "leibniz") {
        auto r = time_exact(method, n, ms, [](const Matrix& m, EvalStats* s) { return oracle::leibniz_det(m, s); });
        r.note = "n! signed products";
        reports.push_back(std::move(r));
      } else if (method == "cofactor") {
        auto r = time_exact(method, n, ms, [](const Matrix& m, EvalStats* s) { return oracle::cofactor_det(m, s); });
        r.note = "first-row expansion by minors";
        reports.push_back(std::move(r));
      } else {
        auto r = time_exact(method, n, ms, [](const Matrix& m, EvalStats* s) { return oracle::bareiss_det(m, s); });
        r.note = "fraction-free elimination, O(n^3); exact divisions not counted";
        reports.push_back(std::move(r));
      }
    }
  }
  return reports;
}

nlohmann::json to_json(const BenchReport& r) {
  return nlohmann::json{{"method", r.method},
                        {"n", r.n},
                        {"runs", r.runs},
                        {"terms", r.terms},
                        {"multiplication_count", r.multiplication_count},
                        {"multiplication_count_chained", r.multiplication_count_chained},
                        {"addition_count", r.addition_count},
                        {"wall_time_per_run_s", r.wall_time_per_run_seconds},
                        {"det_checksum", r.det_checksum},
                        {"note", r.note}};
}

std::string to_json_line(const BenchReport& r) { return to_json(r).dump(); }

}  // namespace sarrus::bench
