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

#include "catprob/matrix.hpp"

#include <sstream>

#include "catprob/error.hpp"

namespace catprob {

namespace {

void require_same_semiring(const Matrix& a, const Matrix& b) {
  if (!(a.semiring() == b.semiring())) {
    fail(ErrorCode::kSemiringMismatch,
         a.semiring().id() + " vs " + b.semiring().id());
  }
}

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Matrix::Matrix(Semiring s, std::size_t rows, std::size_t cols)
    : semiring_(std::move(s)),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, semiring_.zero()) {}

Matrix::Matrix(Semiring s, std::size_t rows, std::size_t cols,
               std::vector<Element> entries)
    : semiring_(std::move(s)),
      rows_(rows),
      cols_(cols),
      entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    fail(ErrorCode::kShapeMismatch,
         "expected " + std::to_string(rows * cols) + " entries, got " +
             std::to_string(entries_.size()));
  }
  for (const Element& e : entries_) {
    if (!semiring_.contains(e)) {
      fail(ErrorCode::kSemiringMismatch,
           "entry is not an element of " + semiring_.id());
    }
  }
}

Matrix Matrix::identity(const Semiring& s, std::size_t n) {
  Matrix m(s, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, s.one());
  return m;
}

Matrix Matrix::from_literals(
    const Semiring& s, const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) fail(ErrorCode::kShapeMismatch, "matrix has no rows");
  const std::size_t cols = rows.front().size();
  std::vector<Element> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (row.size() != cols) {
      fail(ErrorCode::kShapeMismatch, "ragged matrix literal");
    }
    for (const auto& lit : row) entries.push_back(s.parse(lit));
  }
  return Matrix(s, rows.size(), cols, std::move(entries));
}

Matrix Matrix::random(const Semiring& s, std::size_t rows, std::size_t cols,
                      std::mt19937_64& rng) {
  Matrix m(s, rows, cols);
  for (auto& e : m.entries_) e = s.sample(rng);
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, Element v) {
  entries_[r * cols_ + c] = std::move(v);
}

void Matrix::add_to(std::size_t r, std::size_t c, const Element& v) {
  Element& slot = entries_[r * cols_ + c];
  slot = semiring_.add(slot, v);
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) {
      out << (c ? ", " : "") << semiring_.format((*this)(r, c));
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  require_same_semiring(a, b);
  if (a.cols() != b.rows()) {
    fail(ErrorCode::kShapeMismatch,
         "cannot compose " + shape(a) + " after " + shape(b));
  }
  const Semiring& s = a.semiring();
  Matrix out(s, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Element& aik = a(i, k);
      if (s.exact() && s.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.add_to(i, j, s.mul(aik, b(k, j)));
      }
    }
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same_semiring(a, b);
  const Semiring& s = a.semiring();
  Matrix out(s, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Element& aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out.set(i * b.rows() + k, j * b.cols() + l, s.mul(aij, b(k, l)));
        }
      }
    }
  }
  return out;
}

Matrix add(const Matrix& a, const Matrix& b) {
  require_same_semiring(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(ErrorCode::kShapeMismatch, "cannot add " + shape(a) + " and " + shape(b));
  }
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.add_to(r, c, b(r, c));
  }
  return out;
}

Matrix scale(const Element& s, const Matrix& a) {
  const Semiring& ring = a.semiring();
  if (!ring.contains(s)) {
    fail(ErrorCode::kSemiringMismatch, "scalar is not in " + ring.id());
  }
  Matrix out(ring, a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out.set(r, c, ring.mul(s, a(r, c)));
    }
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.semiring(), a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(c, r, a(r, c));
  }
  return out;
}

Matrix adjoint(const Matrix& a) {
  Matrix out(a.semiring(), a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out.set(c, r, a.semiring().conj(a(r, c)));
    }
  }
  return out;
}

Matrix convert(const Matrix& a, const Semiring& to) {
  if (a.semiring() == to) return a;
  std::vector<Element> entries;
  entries.reserve(a.rows() * a.cols());
  for (const Element& e : a.entries()) {
    auto v = convert(e, a.semiring(), to);
    if (!v) {
      fail(ErrorCode::kSemiringMismatch, a.semiring().format(e) +
                                             " is not an element of " + to.id());
    }
    entries.push_back(std::move(*v));
  }
  return Matrix(to, a.rows(), a.cols(), std::move(entries));
}

bool equal(const Matrix& a, const Matrix& b) {
  return !first_difference(a, b).has_value();
}

std::optional<std::pair<std::size_t, std::size_t>> first_difference(
    const Matrix& a, const Matrix& b) {
  if (!(a.semiring() == b.semiring()) || a.rows() != b.rows() ||
      a.cols() != b.cols()) {
    return std::make_pair(a.rows(), a.cols());
  }
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!a.semiring().equal(a(r, c), b(r, c))) return std::make_pair(r, c);
    }
  }
  return std::nullopt;
}

std::vector<Element> column_sums(const Matrix& a) {
  const Semiring& s = a.semiring();
  std::vector<Element> sums(a.cols(), s.zero());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) sums[c] = s.add(sums[c], a(r, c));
  }
  return sums;
}

}  // namespace catprob
