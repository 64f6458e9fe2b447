// Copyright 2026 The catprob Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Bracketed matrix literals shared by scenario files and diagram bindings:
// "[[a, b], [c, d]]" is a matrix given by rows, "[a, b]" a flat vector.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "catprob/matrix.hpp"

namespace catprob {

struct MatrixLiteral {
  std::vector<std::vector<std::string>> rows;
  bool flat = false;  // written as a single bracket level
};

// Throws kSyntax with a character offset on malformed input.
MatrixLiteral parse_matrix_literal(std::string_view text);

// A flat literal is read as a column when `flat_as_column`, else as a row.
Matrix to_matrix(const Semiring& s, const MatrixLiteral& lit, bool flat_as_column);

}  // namespace catprob
