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

#include "sarrus/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "sarrus/error.hpp"

namespace sarrus::render {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  std::string s(buf);
  if (s.size() > 2 && s.compare(s.size() - 2, 2, ".0") == 0) s.resize(s.size() - 2);
  return s;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += ch;
    }
  }
  return out;
}

std::string cell_text(const RenderSpec& spec, int row, int column_label) {
  if (spec.matrix) return to_string(spec.matrix->entry(row, column_label));
  return std::to_string(column_label);
}

struct StripSigns {
  int start;
  Sign descending;
  Sign ascending;
};

std::vector<StripSigns> signs_of(const SchemeStrip& strip) {
  std::vector<StripSigns> out;
  for (const auto& w : windows(strip)) {
    out.push_back(StripSigns{w.position, parity(w.descending), parity(w.ascending)});
  }
  return out;
}

std::string render_svg(const RenderSpec& spec) {
  const Scheme& sch = spec.scheme;
  const int n = sch.n;
  const double cell = spec.cell_size;
  const double left = cell;
  const double title_h = cell * 0.75;
  const double badge_h = spec.show_signs ? cell * 0.75 : 0.0;
  const double gap = cell * 0.5;
  const double strip_h = title_h + badge_h + n * cell + gap;

  std::size_t max_cols = 0;
  for (const auto& s : sch.strips) max_cols = std::max(max_cols, s.columns.size());
  const double width = left + static_cast<double>(max_cols) * cell + cell * 0.5;
  const double height = static_cast<double>(sch.strips.size()) * strip_h + gap;

  const std::string pos_color = xml_escape(spec.positive_color);
  const std::string neg_color = xml_escape(spec.negative_color);
  const auto color = [&](Sign s) -> const std::string& {
    return s == Sign::plus ? pos_color : neg_color;
  };
  const auto sign_name = [](Sign s) { return s == Sign::plus ? "positive" : "negative"; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width)
      << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height)
      << "\" font-family=\"monospace\" font-size=\"" << num(cell * 0.45) << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" fill=\"white\"/>\n";

  for (std::size_t si = 0; si < sch.strips.size(); ++si) {
    const SchemeStrip& strip = sch.strips[si];
    const double top = gap + static_cast<double>(si) * strip_h;
    const double grid_top = top + title_h + badge_h;
    const auto cx = [&](int col) { return left + (col - 0.5) * cell; };
    const auto cy = [&](int row) { return grid_top + (row - 0.5) * cell; };

    out << "<g class=\"strip\" id=\"strip-" << si + 1 << "\">\n";
    out << "<text class=\"title\" x=\"" << num(left) << "\" y=\"" << num(top + title_h * 0.7)
        << "\">strip " << si + 1 << ": " << strip.columns.size() << " columns, "
        << strip.starts.size() << " starts</text>\n";

    for (int row = 1; row <= n; ++row) {
      out << "<text class=\"row-label\" x=\"" << num(left * 0.5) << "\" y=\"" << num(cy(row))
          << "\" text-anchor=\"middle\" dominant-baseline=\"central\">r" << row << "</text>\n";
    }
    for (std::size_t j = 0; j < strip.columns.size(); ++j) {
      const int col = static_cast<int>(j) + 1;
      for (int row = 1; row <= n; ++row) {
        out << "<rect class=\"cell\" x=\"" << num(left + (col - 1) * cell) << "\" y=\""
            << num(grid_top + (row - 1) * cell) << "\" width=\"" << num(cell) << "\" height=\""
            << num(cell) << "\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";
        out << "<text class=\"label\" x=\"" << num(cx(col)) << "\" y=\"" << num(cy(row))
            << "\" text-anchor=\"middle\" dominant-baseline=\"central\">"
            << xml_escape(cell_text(spec, row, strip.columns[j])) << "</text>\n";
      }
    }

    const double stroke = std::max(1.0, cell * 0.3);
    for (const auto& s : signs_of(strip)) {
      const int last = s.start + n - 1;
      out << "<line class=\"diag " << sign_name(s.descending) << "\" data-start=\"" << s.start
          << "\" data-direction=\"descending\" x1=\"" << num(cx(s.start)) << "\" y1=\""
          << num(cy(1)) << "\" x2=\"" << num(cx(last)) << "\" y2=\"" << num(cy(n))
          << "\" stroke=\"" << color(s.descending) << "\" stroke-width=\"" << num(stroke)
          << "\" stroke-opacity=\"0.3\" stroke-linecap=\"round\"/>\n";
      if (n == 1) continue;  // the ascending diagonal is the same cell
      out << "<line class=\"diag " << sign_name(s.ascending) << "\" data-start=\"" << s.start
          << "\" data-direction=\"ascending\" x1=\"" << num(cx(s.start)) << "\" y1=\""
          << num(cy(n)) << "\" x2=\"" << num(cx(last)) << "\" y2=\"" << num(cy(1))
          << "\" stroke=\"" << color(s.ascending) << "\" stroke-width=\"" << num(stroke)
          << "\" stroke-opacity=\"0.3\" stroke-linecap=\"round\"/>\n";
    }

    if (spec.show_signs) {
      const double by = top + title_h + badge_h * 0.6;
      for (const auto& s : signs_of(strip)) {
        out << "<text class=\"badge\" data-start=\"" << s.start << "\" x=\"" << num(cx(s.start))
            << "\" y=\"" << num(by) << "\" text-anchor=\"middle\">";
        out << "<tspan fill=\"" << color(s.descending) << "\">"
            << (s.descending == Sign::plus ? "+" : "−") << "</tspan>";
        if (n > 1 && s.ascending != s.descending) {
          out << "<tspan fill=\"" << color(s.ascending) << "\">"
              << (s.ascending == Sign::plus ? "+" : "−") << "</tspan>";
        }
        out << "</text>\n";
      }
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_ascii(const RenderSpec& spec) {
  const Scheme& sch = spec.scheme;
  const int n = sch.n;
  std::ostringstream out;
  for (std::size_t si = 0; si < sch.strips.size(); ++si) {
    const SchemeStrip& strip = sch.strips[si];
    std::size_t w = 2;
    for (std::size_t j = 0; j < strip.columns.size(); ++j) {
      for (int row = 1; row <= n; ++row) w = std::max(w, cell_text(spec, row, strip.columns[j]).size());
    }
    const auto pad = [w](const std::string& s) { return std::string(w + 1 - s.size(), ' ') + s; };

    if (si > 0) out << '\n';
    out << "strip " << si + 1 << ": " << strip.columns.size() << " columns, " << strip.starts.size()
        << " starts\n";
    if (spec.show_signs) {
      std::vector<std::string> badge(strip.columns.size());
      for (const auto& s : signs_of(strip)) {
        std::string b(1, to_char(s.descending));
        if (n > 1 && s.ascending != s.descending) b += to_char(s.ascending);
        badge[static_cast<std::size_t>(s.start - 1)] = b;
      }
      out << "     ";
      for (const auto& b : badge) out << pad(b);
      out << '\n';
    }
    for (int row = 1; row <= n; ++row) {
      std::string label = "r" + std::to_string(row);
      out << label << std::string(4 - std::min<std::size_t>(label.size(), 3), ' ') << '|';
      for (std::size_t j = 0; j < strip.columns.size(); ++j) out << pad(cell_text(spec, row, strip.columns[j]));
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace

std::string render(const RenderSpec& spec) {
  if (spec.cell_size <= 0) throw InvalidConfig("cell_size must be positive");
  if (!validate(spec.scheme).valid()) throw InvalidScheme("render: scheme does not validate");
  if (spec.matrix && spec.matrix->size() != spec.scheme.n) {
    throw SizeMismatch("render: matrix size differs from scheme size");
  }
  return spec.output_format == OutputFormat::svg ? render_svg(spec) : render_ascii(spec);
}

}  // namespace sarrus::render
