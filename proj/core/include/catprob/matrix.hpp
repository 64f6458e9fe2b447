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

#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "catprob/semiring.hpp"

namespace catprob {

// Dense row-major matrix over a runtime-selected semiring.
class Matrix {
 public:
  Matrix(Semiring s, std::size_t rows, std::size_t cols);
  Matrix(Semiring s, std::size_t rows, std::size_t cols,
         std::vector<Element> entries);

  static Matrix identity(const Semiring& s, std::size_t n);
  // Parses nested rows of element literals.
  static Matrix from_literals(
      const Semiring& s, const std::vector<std::vector<std::string>>& rows);
  static Matrix random(const Semiring& s, std::size_t rows, std::size_t cols,
                       std::mt19937_64& rng);

  const Semiring& semiring() const { return semiring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const Element> entries() const { return entries_; }

  const Element& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, Element v);
  // In-place accumulate: (r, c) += v.
  void add_to(std::size_t r, std::size_t c, const Element& v);

  std::string to_string() const;

 private:
  Semiring semiring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> entries_;
};

// Matrix product a * b.
Matrix multiply(const Matrix& a, const Matrix& b);
// Kronecker product; row (i, k) is linearised as i * b.rows() + k.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix scale(const Element& s, const Matrix& a);
Matrix transpose(const Matrix& a);
// Entrywise involution followed by transpose.
Matrix adjoint(const Matrix& a);
// Entrywise conversion into another semiring; kSemiringMismatch if an entry
// is not representable there.
Matrix convert(const Matrix& a, const Semiring& to);

// Semiring equality on every entry (tolerance-aware in approximate mode).
bool equal(const Matrix& a, const Matrix& b);
// Row/column of the first entry where the matrices differ; nullopt if equal.
// Shape differences are reported as (rows, cols) of the first operand.
std::optional<std::pair<std::size_t, std::size_t>> first_difference(
    const Matrix& a, const Matrix& b);

// Sum of each column.
std::vector<Element> column_sums(const Matrix& a);

}  // namespace catprob
