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

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "sarrus/matrix.hpp"
#include "sarrus/permutation.hpp"
#include "sarrus/scheme.hpp"

namespace sarrus::io {

enum class MatrixFormat { csv, json };

/// ".json" -> json, anything else -> csv.
MatrixFormat format_for_path(const std::filesystem::path& path);

/// CSV: one row per line, comma-separated integers or rationals "p/q"; blank
/// lines are skipped. JSON: array of arrays whose items are integers or
/// strings holding an integer or rational.
/// Throws ParseError (1-based line and column; for CSV the column is the field
/// index), NonSquare, or Error if the file cannot be read.
Matrix parse_matrix_text(std::string_view text, MatrixFormat format);
Matrix parse_matrix(const std::filesystem::path& path, MatrixFormat format);

nlohmann::json to_json(const Permutation& p);
Permutation permutation_from_json(const nlohmann::json& j);

/// {"n": int, "strips": [{"columns": [...], "starts": [...]}]}
nlohmann::json to_json(const Scheme& sch);
/// Throws FormatError when fields are missing or mistyped. Contents are not
/// validated against S_n; run validate() for that.
Scheme scheme_from_json(const nlohmann::json& j);

/// Two-space indented JSON with a trailing newline.
std::string dump_scheme(const Scheme& sch);
/// Throws ParseError on malformed JSON, FormatError on a bad shape.
Scheme parse_scheme_text(std::string_view text);
Scheme load_scheme(const std::filesystem::path& path);

nlohmann::json to_json(const ValidationReport& rep);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace sarrus::io
