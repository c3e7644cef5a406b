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

#include "sarrus/io.hpp"

#include <fstream>
#include <sstream>

#include "sarrus/error.hpp"

namespace sarrus::io {

using nlohmann::json;

MatrixFormat format_for_path(const std::filesystem::path& path) {
  return path.extension() == ".json" ? MatrixFormat::json : MatrixFormat::csv;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << contents;
  if (!out) throw Error("failed writing " + path.string());
}

namespace {

Matrix parse_csv(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    auto& row = rows.emplace_back();
    int field = 0;
    std::size_t fpos = 0;
    while (true) {
      ++field;
      auto comma = line.find(',', fpos);
      const auto cell = line.substr(fpos, comma == std::string_view::npos ? line.size() - fpos
                                                                           : comma - fpos);
      auto q = parse_rational(cell);
      if (!q) {
        throw ParseError(line_no, field,
                         "expected an integer or p/q rational, got '" + std::string(cell) + "'");
      }
      row.push_back(std::move(*q));
      if (comma == std::string_view::npos) break;
      fpos = comma + 1;
    }
  }
  if (rows.empty()) throw ParseError(1, 1, "empty matrix");
  return Matrix(std::move(rows));
}

std::pair<int, int> line_col_at(std::string_view text, std::size_t byte) {
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is one past the offending character.
    auto [line, col] = line_col_at(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(line, col, e.what());
  }
}

Matrix parse_json_matrix(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_array() || j.empty()) throw ParseError(1, 1, "expected a non-empty array of rows");
  std::vector<std::vector<Rational>> rows;
  int r = 0;
  for (const auto& jrow : j) {
    ++r;
    if (!jrow.is_array()) throw ParseError(r, 1, "row is not an array");
    auto& row = rows.emplace_back();
    int c = 0;
    for (const auto& item : jrow) {
      ++c;
      std::optional<Rational> q;
      if (item.is_number_integer()) {
        q = parse_rational(item.dump());
      } else if (item.is_string()) {
        q = parse_rational(item.get<std::string>());
      }
      if (!q) throw ParseError(r, c, "expected an integer or \"p/q\" string, got " + item.dump());
      row.push_back(std::move(*q));
    }
  }
  return Matrix(std::move(rows));
}

std::vector<int> int_array(const json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_array()) {
    throw FormatError(std::string("strip field '") + field + "' must be an array of integers");
  }
  std::vector<int> out;
  for (const auto& v : j.at(field)) {
    if (!v.is_number_integer()) {
      throw FormatError(std::string("strip field '") + field + "' holds a non-integer: " + v.dump());
    }
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

Matrix parse_matrix_text(std::string_view text, MatrixFormat format) {
  return format == MatrixFormat::json ? parse_json_matrix(text) : parse_csv(text);
}

Matrix parse_matrix(const std::filesystem::path& path, MatrixFormat format) {
  return parse_matrix_text(read_file(path), format);
}

json to_json(const Permutation& p) { return json(std::vector<int>(p.images().begin(), p.images().end())); }

Permutation permutation_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("permutation must be a JSON array");
  std::vector<int> images;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw FormatError("permutation entries must be integers");
    images.push_back(v.get<int>());
  }
  return Permutation(std::move(images));
}

json to_json(const Scheme& sch) {
  json strips = json::array();
  for (const auto& s : sch.strips) {
    strips.push_back(json{{"columns", s.columns}, {"starts", s.starts}});
  }
  return json{{"n", sch.n}, {"strips", std::move(strips)}};
}

Scheme scheme_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("scheme must be a JSON object");
  if (!j.contains("n") || !j.at("n").is_number_integer()) {
    throw FormatError("scheme field 'n' must be an integer");
  }
  if (!j.contains("strips") || !j.at("strips").is_array() || j.at("strips").empty()) {
    throw FormatError("scheme field 'strips' must be a non-empty array");
  }
  Scheme sch;
  sch.n = j.at("n").get<int>();
  if (sch.n < 1) throw FormatError("scheme field 'n' must be positive");
  for (const auto& js : j.at("strips")) {
    if (!js.is_object()) throw FormatError("each strip must be a JSON object");
    sch.strips.push_back(SchemeStrip{sch.n, int_array(js, "columns"), int_array(js, "starts")});
  }
  return sch;
}

std::string dump_scheme(const Scheme& sch) { return to_json(sch).dump(2) + "\n"; }

Scheme parse_scheme_text(std::string_view text) { return scheme_from_json(parse_json(text)); }

Scheme load_scheme(const std::filesystem::path& path) { return parse_scheme_text(read_file(path)); }

namespace {

json to_json(const WindowRef& w) {
  return json{{"strip", w.strip},
              {"start", w.start},
              {"direction", w.direction == Direction::descending ? "descending" : "ascending"}};
}

}  // namespace

json to_json(const ValidationReport& rep) {
  json dups = json::array();
  for (const auto& [perm, refs] : rep.duplicates) {
    json jr = json::array();
    for (const auto& r : refs) jr.push_back(to_json(r));
    dups.push_back(json{{"permutation", to_json(perm)}, {"windows", std::move(jr)}});
  }
  json missing = json::array();
  for (const auto& p : rep.missing) missing.push_back(to_json(p));
  json invalid = json::array();
  for (const auto& w : rep.invalid_windows) invalid.push_back(json{{"strip", w.strip}, {"start", w.start}});
  return json{{"n", rep.n},
              {"valid", rep.valid()},
              {"window_count", rep.window_count},
              {"covered", rep.covered},
              {"missing_count", rep.missing_count},
              {"even_count", rep.even_count},
              {"odd_count", rep.odd_count},
              {"duplicates", std::move(dups)},
              {"missing", std::move(missing)},
              {"invalid_windows", std::move(invalid)}};
}

}  // namespace sarrus::io
