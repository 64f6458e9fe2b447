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

#include "catprob/linalg.hpp"

#include <Eigen/Dense>

#include "catprob/error.hpp"

namespace catprob::linalg {

namespace {

std::size_t numeric_rank(const Matrix& m) {
  const Semiring& s = m.semiring();
  Eigen::MatrixXcd a(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          s.to_complex(m(r, c));
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  std::size_t count = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > s.tolerance()) ++count;
  }
  return count;
}

}  // namespace

std::size_t rank(const Matrix& input) {
  if (!input.semiring().exact()) return numeric_rank(input);
  Matrix m = input.semiring().kind() == SemiringKind::kRatNonNeg
                 ? convert(input, Semiring::rat())
                 : input;
  const Semiring& s = m.semiring();
  if (!s.is_field()) {
    fail(ErrorCode::kUnsupported, "rank needs a field, got " + s.id());
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && s.is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        Element tmp = m(rank, c);
        m.set(rank, c, m(pivot, c));
        m.set(pivot, c, std::move(tmp));
      }
    }
    const Element inv = s.inverse(m(rank, col));
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (s.is_zero(m(r, col))) continue;
      const Element factor = s.mul(m(r, col), inv);
      for (std::size_t c = col; c < m.cols(); ++c) {
        m.set(r, c, s.subtract(m(r, c), s.mul(factor, m(rank, c))));
      }
    }
    ++rank;
  }
  return rank;
}

std::optional<Matrix> inverse(const Matrix& input) {
  const Semiring& s = input.semiring();
  if (input.rows() != input.cols()) {
    fail(ErrorCode::kShapeMismatch, "only square matrices have inverses");
  }
  if (!s.has_additive_inverses()) {
    fail(ErrorCode::kUnsupported, "inverse needs additive inverses in " + s.id());
  }
  const std::size_t n = input.rows();
  Matrix a = input;
  Matrix inv = Matrix::identity(s, n);
  auto swap_rows = [&](Matrix& m, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) {
      Element tmp = m(i, c);
      m.set(i, c, m(j, c));
      m.set(j, c, std::move(tmp));
    }
  };
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !s.is_invertible(a(pivot, col))) ++pivot;
    if (pivot == n) return std::nullopt;
    swap_rows(a, col, pivot);
    swap_rows(inv, col, pivot);
    const Element p = s.inverse(a(col, col));
    for (std::size_t c = 0; c < n; ++c) {
      a.set(col, c, s.mul(p, a(col, c)));
      inv.set(col, c, s.mul(p, inv(col, c)));
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || s.is_zero(a(r, col))) continue;
      const Element f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a.set(r, c, s.subtract(a(r, c), s.mul(f, a(col, c))));
        inv.set(r, c, s.subtract(inv(r, c), s.mul(f, inv(col, c))));
      }
    }
  }
  return inv;
}

}  // namespace catprob::linalg
