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

// Command-line front end: det, validate, generate, pattern, render, bench,
// export-builtin.
//
// Exit codes: 0 success, 1 usage error, 2 computation error, 3 generator found
// nothing.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sarrus/bench.hpp"
#include "sarrus/builtin.hpp"
#include "sarrus/error.hpp"
#include "sarrus/generator.hpp"
#include "sarrus/io.hpp"
#include "sarrus/oracle.hpp"
#include "sarrus/pattern.hpp"
#include "sarrus/render.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;
constexpr int kExitNotFound = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SchemeSource {
  std::string path;
  int builtin = 0;

  void add_to(CLI::App* cmd) {
    auto* s = cmd->add_option("--scheme", path, "Scheme JSON file");
    auto* b = cmd->add_option("--builtin", builtin, "Built-in scheme for n = 2..5");
    s->excludes(b);
  }

  std::optional<sarrus::Scheme> resolve() const {
    if (!path.empty()) return sarrus::io::load_scheme(path);
    if (builtin != 0) return sarrus::builtin::for_size(builtin);
    return std::nullopt;
  }
};

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    sarrus::io::write_file(out_path, text);
  }
}

sarrus::io::MatrixFormat matrix_format(const std::string& flag, const std::string& path) {
  if (flag == "csv") return sarrus::io::MatrixFormat::csv;
  if (flag == "json") return sarrus::io::MatrixFormat::json;
  if (flag.empty()) return sarrus::io::format_for_path(path);
  throw UsageError("--format must be csv or json");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Determinants via generalized Sarrus column-strip schemes"};
  app.require_subcommand(1);

  // det
  auto* det = app.add_subcommand("det", "Compute a determinant exactly");
  std::string det_matrix;
  std::string det_format;
  std::string det_method = "scheme";
  bool det_sums = false;
  SchemeSource det_scheme;
  det->add_option("--matrix", det_matrix, "Matrix file (CSV or JSON)")->required();
  det->add_option("--format", det_format, "csv or json (default: from extension)");
  det->add_option("--method", det_method, "scheme, leibniz, cofactor or bareiss")
      ->check(CLI::IsMember({"scheme", "leibniz", "cofactor", "bareiss"}));
  det->add_flag("--sums", det_sums, "Also print the positive and negative sums");
  det_scheme.add_to(det);

  // validate
  auto* val = app.add_subcommand("validate", "Check that a scheme covers S_n exactly once");
  SchemeSource val_scheme;
  val_scheme.add_to(val);

  // generate
  auto* gen = app.add_subcommand("generate", "Search for a scheme of chained blocks");
  sarrus::generator::SearchConfig gen_cfg;
  std::string gen_out;
  std::size_t gen_verify = 0;
  bool gen_allow_small = false;
  gen->add_option("--n", gen_cfg.n, "Matrix size (2..8)")->required();
  gen->add_option("--seed", gen_cfg.random_seed, "Random seed");
  gen->add_option("--time-limit", gen_cfg.time_limit_seconds, "Seconds");
  gen->add_option("--max-blocks", gen_cfg.max_blocks_per_strip, "Maximum blocks per strip");
  gen->add_flag("--allow-self-symmetric", gen_allow_small,
                "Cover self-symmetric classes with restricted-start blocks");
  gen->add_option("--verify", gen_verify, "Random-matrix oracle checks to run on the result");
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  // pattern
  auto* pat = app.add_subcommand("pattern", "Print the sign pattern class for a size");
  int pat_n = 0;
  pat->add_option("--n", pat_n, "Matrix size (>= 2)")->required();

  // render
  auto* ren = app.add_subcommand("render", "Draw a scheme as SVG or ASCII");
  SchemeSource ren_scheme;
  sarrus::render::RenderSpec ren_spec;
  std::string ren_format = "svg";
  std::string ren_matrix;
  std::string ren_out;
  bool ren_no_signs = false;
  ren_scheme.add_to(ren);
  ren->add_option("--format", ren_format, "svg or ascii")->check(CLI::IsMember({"svg", "ascii"}));
  ren->add_option("--cell-size", ren_spec.cell_size, "Cell size in pixels (SVG)");
  ren->add_option("--positive-color", ren_spec.positive_color);
  ren->add_option("--negative-color", ren_spec.negative_color);
  ren->add_flag("--no-signs", ren_no_signs, "Omit the sign badges");
  ren->add_option("--matrix", ren_matrix, "Show entries of this matrix instead of column labels");
  ren->add_option("--out", ren_out, "Output file (default stdout)");

  // bench
  auto* ben = app.add_subcommand("bench", "Count operations and time each method");
  std::vector<std::string> ben_methods = {"scheme", "leibniz", "cofactor", "bareiss"};
  std::vector<int> ben_sizes = {4, 5};
  int ben_runs = 10;
  std::uint64_t ben_seed = 1;
  std::string ben_isa;
  std::string ben_out;
  ben->add_option("--methods", ben_methods, "Comma-separated methods")->delimiter(',');
  ben->add_option("--sizes", ben_sizes, "Comma-separated sizes")->delimiter(',');
  ben->add_option("--runs", ben_runs, "Matrices per size");
  ben->add_option("--seed", ben_seed, "Random seed");
  ben->add_option("--isa", ben_isa, "Kernel for scheme-f64: scalar, avx2 or neon");
  ben->add_option("--out", ben_out, "Output file (default stdout)");

  // export-builtin
  auto* exp = app.add_subcommand("export-builtin", "Write a built-in scheme as JSON");
  int exp_n = 0;
  std::string exp_out;
  exp->add_option("--n", exp_n, "2, 3, 4 or 5")->required();
  exp->add_option("--out", exp_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (det->parsed()) {
      const auto m = sarrus::io::parse_matrix(det_matrix, matrix_format(det_format, det_matrix));
      if (det_method == "scheme") {
        auto sch = det_scheme.resolve();
        if (!sch) {
          if (m.size() < 2 || m.size() > 5) {
            throw UsageError("no built-in scheme for n = " + std::to_string(m.size()) +
                             "; pass --scheme");
          }
          sch = sarrus::builtin::for_size(m.size());
        }
        if (sch->n != m.size()) {
          throw sarrus::SizeMismatch("scheme is for n = " + std::to_string(sch->n) + ", matrix is " +
                                     std::to_string(m.size()) + "x" + std::to_string(m.size()));
        }
        const sarrus::EvaluationPlan plan(*sch);
        std::cout << plan.evaluate(m).get_str() << '\n';
        if (det_sums) {
          const auto [plus, minus] = plan.positive_negative_sums(m);
          std::cout << "positive " << plus.get_str() << '\n' << "negative " << minus.get_str() << '\n';
        }
      } else {
        sarrus::Rational d;
        if (det_method == "leibniz") {
          d = sarrus::oracle::leibniz_det(m);
        } else if (det_method == "cofactor") {
          d = sarrus::oracle::cofactor_det(m);
        } else {
          d = sarrus::oracle::bareiss_det(m);
        }
        std::cout << d.get_str() << '\n';
        if (det_sums) {
          const auto [plus, minus] = sarrus::oracle::parity_partition_sums(m);
          std::cout << "positive " << plus.get_str() << '\n' << "negative " << minus.get_str() << '\n';
        }
      }
      return 0;
    }

    if (val->parsed()) {
      const auto sch = val_scheme.resolve();
      if (!sch) throw UsageError("validate needs --scheme or --builtin");
      const auto rep = sarrus::validate(*sch);
      std::cout << sarrus::io::to_json(rep).dump(2) << '\n';
      return rep.valid() ? 0 : kExitComputation;
    }

    if (gen->parsed()) {
      gen_cfg.require_full_size_classes = !gen_allow_small;
      const auto sch = sarrus::generator::search_scheme(gen_cfg);
      if (gen_verify > 0) sarrus::generator::verify_generated(sch, gen_verify, gen_cfg.random_seed);
      emit(gen_out, sarrus::io::dump_scheme(sch));
      return 0;
    }

    if (pat->parsed()) {
      const auto cls = sarrus::pattern::classify(pat_n);
      std::cout << "n = " << cls.n << ", class " << sarrus::pattern::to_string(cls.residue_class)
                << '\n'
                << "shift_alternates " << (cls.shift_alternates ? "true" : "false") << '\n'
                << "ascending_flips " << (cls.ascending_flips ? "true" : "false") << '\n'
                << "start descending ascending\n";
      for (const auto& s : sarrus::pattern::basic_strip_signs(pat_n)) {
        std::cout << s.start << ' ' << sarrus::to_char(s.descending) << ' '
                  << sarrus::to_char(s.ascending) << '\n';
      }
      return 0;
    }

    if (ren->parsed()) {
      auto sch = ren_scheme.resolve();
      if (!sch) throw UsageError("render needs --scheme or --builtin");
      ren_spec.scheme = std::move(*sch);
      ren_spec.show_signs = !ren_no_signs;
      ren_spec.output_format =
          ren_format == "ascii" ? sarrus::render::OutputFormat::ascii : sarrus::render::OutputFormat::svg;
      if (!ren_matrix.empty()) {
        ren_spec.matrix = sarrus::io::parse_matrix(ren_matrix, sarrus::io::format_for_path(ren_matrix));
      }
      emit(ren_out, sarrus::render::render(ren_spec));
      return 0;
    }

    if (ben->parsed()) {
      auto isa = sarrus::kernels::best_isa();
      if (!ben_isa.empty()) {
        if (ben_isa == "scalar") {
          isa = sarrus::kernels::Isa::scalar;
        } else if (ben_isa == "avx2") {
          isa = sarrus::kernels::Isa::avx2;
        } else if (ben_isa == "neon") {
          isa = sarrus::kernels::Isa::neon;
        } else {
          throw UsageError("--isa must be scalar, avx2 or neon");
        }
        if (!sarrus::kernels::isa_supported(isa)) {
          throw UsageError("kernel '" + ben_isa + "' is not available on this machine");
        }
      }
      std::string text;
      for (const auto& r : sarrus::bench::bench(ben_methods, ben_sizes, ben_runs, ben_seed, isa)) {
        text += sarrus::bench::to_json_line(r) + '\n';
      }
      emit(ben_out, text);
      return 0;
    }

    if (exp->parsed()) {
      emit(exp_out, sarrus::io::dump_scheme(sarrus::builtin::for_size(exp_n)));
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const sarrus::NotFound& e) {
    std::cerr << "not found: " << e.what() << '\n';
    return kExitNotFound;
  } catch (const sarrus::InvalidConfig& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitUsage;
}
