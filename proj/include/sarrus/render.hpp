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

#include <optional>
#include <string>

#include "sarrus/matrix.hpp"
#include "sarrus/scheme.hpp"

namespace sarrus::render {

enum class OutputFormat { svg, ascii };

struct RenderSpec {
  Scheme scheme;
  int cell_size = 32;
  bool show_signs = true;
  std::string positive_color = "blue";
  std::string negative_color = "orange";
  OutputFormat output_format = OutputFormat::svg;
  /// When set, cells show the matrix entries instead of column labels.
  std::optional<Matrix> matrix;
};

/// One grid per strip (n rows by strip-length columns), a stroke for every
/// descending and ascending diagonal coloured by its parity, and a sign badge
/// above each start. Output depends only on the spec.
/// Throws InvalidScheme unless the scheme validates, InvalidConfig for a
/// non-positive cell size, SizeMismatch for a matrix of the wrong size.
std::string render(const RenderSpec& spec);

}  // namespace sarrus::render
