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

#include "catprob/backend.hpp"

#include <algorithm>
#include <numeric>

#include "catprob/error.hpp"
#include "catprob/linalg.hpp"

namespace catprob {

namespace matcat {

Matrix random_normalised_matrix(const Semiring& s, std::size_t rows,
                                std::size_t cols, std::mt19937_64& rng) {
  if (rows == 0) fail(ErrorCode::kInvalidArgument, "no rows to normalise");
  Matrix m(s, rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    switch (s.kind()) {
      case SemiringKind::kBool: {
        bool any = false;
        for (std::size_t r = 0; r < rows; ++r) {
          const bool v = rng() % 2 == 0;
          any |= v;
          m.set(r, c, v);
        }
        if (!any) m.set(rng() % rows, c, true);
        break;
      }
      case SemiringKind::kNat:
        m.set(rng() % rows, c, s.one());
        break;
      case SemiringKind::kRatNonNeg:
      case SemiringKind::kComplexF64: {
        std::vector<long> w(rows);
        for (auto& x : w) x = static_cast<long>(rng() % 5);
        long total = std::accumulate(w.begin(), w.end(), 0L);
        if (total == 0) {
          w[rng() % rows] = 1;
          total = 1;
        }
        for (std::size_t r = 0; r < rows; ++r) {
          Rational q(Integer(w[r]), Integer(total));
          q.canonicalize();
          if (s.exact()) {
            m.set(r, c, q);
          } else {
            m.set(r, c, std::complex<double>(q.get_d(), 0.0));
          }
        }
        break;
      }
      default: {
        Element rest = s.one();
        for (std::size_t r = 0; r + 1 < rows; ++r) {
          const Element v = s.sample(rng);
          m.set(r, c, v);
          rest = s.subtract(rest, v);
        }
        m.set(rows - 1, c, rest);
        break;
      }
    }
  }
  return m;
}

std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace matcat

ClassicalBackend::Arrow ClassicalBackend::embed(const matcat::Morphism& m) const {
  if (!(m.semiring() == s_)) {
    return Arrow(m.dom(), m.cod(), catprob::convert(m.matrix(), s_));
  }
  return m;
}

ClassicalBackend::Arrow ClassicalBackend::from_matrix(const Object& dom,
                                                      const Object& cod,
                                                      const Matrix& m,
                                                      bool /*pure*/) const {
  return Arrow(dom, cod, catprob::convert(m, s_));
}

ClassicalBackend::Arrow ClassicalBackend::random_arrow(const Object& dom,
                                                       const Object& cod,
                                                       std::mt19937_64& rng,
                                                       bool normalised) const {
  if (normalised) {
    return Arrow(dom, cod,
                 matcat::random_normalised_matrix(s_, cod.size(), dom.size(), rng));
  }
  return Arrow(dom, cod, Matrix::random(s_, cod.size(), dom.size(), rng));
}

std::pair<ClassicalBackend::Arrow, ClassicalBackend::Arrow>
ClassicalBackend::random_spo(const matcat::ClassicalObject& x, const Object& h,
                             std::mt19937_64& rng) const {
  const std::size_t k = x.size();
  const std::size_t n = h.size();
  if (k > n) {
    fail(ErrorCode::kInvalidArgument,
         "a sharp pair needs |X| <= |H|, got " + std::to_string(k) + " > " +
             std::to_string(n));
  }
  // p embeds X along a random injection; m undoes it on the image and sends
  // everything else somewhere at random.
  const std::vector<std::size_t> slot = matcat::random_permutation(n, rng);
  Matrix p(s_, n, k);
  Matrix m = matcat::random_normalised_matrix(s_, k, n, rng);
  for (std::size_t i = 0; i < k; ++i) {
    p.set(slot[i], i, s_.one());
    for (std::size_t r = 0; r < k; ++r) {
      m.set(r, slot[i], r == i ? s_.one() : s_.zero());
    }
  }
  // Where inverses exist, conjugate by a random normalised change of
  // coordinates T: (T p, m T^-1) is again sharp and m T^-1 stays normalised.
  if (s_.has_additive_inverses()) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      const Matrix t = matcat::random_normalised_matrix(s_, n, n, rng);
      if (auto t_inv = linalg::inverse(t)) {
        p = multiply(t, p);
        m = multiply(m, *t_inv);
        break;
      }
    }
  }
  return {Arrow(x, h, std::move(p)), Arrow(h, x, std::move(m))};
}

}  // namespace catprob
