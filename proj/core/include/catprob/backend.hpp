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

// The interface shared by every theory the generic layers (Karoubi envelope,
// Bell scenarios, diagram evaluation, self-tests) run against, plus the
// classical theory Mat(R) packaged as such a backend.

#pragma once

#include <concepts>
#include <cstddef>
#include <random>
#include <string>
#include <utility>

#include "catprob/matcat.hpp"
#include "catprob/semiring.hpp"

namespace catprob {

// A symmetric monoidal category enriched in commutative monoids with an
// environment structure, together with a fully faithful embedding of the
// classical theory Mat(R) over its scalars R.
template <typename B>
concept TheoryBackend = requires(const B& b, const typename B::Object& o,
                                 const typename B::Arrow& f, const Element& r,
                                 const matcat::ClassicalObject& x,
                                 const matcat::Morphism& m, const Matrix& mat,
                                 std::mt19937_64& rng) {
  { b.name() } -> std::convertible_to<std::string>;
  // S, the semiring entries live in, and R, the semiring of scalars.
  { b.semiring() } -> std::convertible_to<Semiring>;
  { b.scalars() } -> std::convertible_to<Semiring>;

  { b.unit() } -> std::same_as<typename B::Object>;
  { b.tensor(o, o) } -> std::same_as<typename B::Object>;
  { b.classical(x) } -> std::same_as<typename B::Object>;
  { b.same_object(o, o) } -> std::convertible_to<bool>;
  { b.describe(o) } -> std::convertible_to<std::string>;
  { b.dim(o) } -> std::convertible_to<std::size_t>;
  { b.random_object(rng) } -> std::same_as<typename B::Object>;

  { b.dom(f) } -> std::convertible_to<typename B::Object>;
  { b.cod(f) } -> std::convertible_to<typename B::Object>;
  { b.identity(o) } -> std::same_as<typename B::Arrow>;
  { b.zero(o, o) } -> std::same_as<typename B::Arrow>;
  { b.compose(f, f) } -> std::same_as<typename B::Arrow>;
  { b.tensor(f, f) } -> std::same_as<typename B::Arrow>;
  { b.sum(f, f) } -> std::same_as<typename B::Arrow>;
  { b.scale(r, f) } -> std::same_as<typename B::Arrow>;
  { b.swap(o, o) } -> std::same_as<typename B::Arrow>;
  { b.discard(o) } -> std::same_as<typename B::Arrow>;
  { b.equal(f, f) } -> std::convertible_to<bool>;
  { b.is_normalised(f) } -> std::convertible_to<bool>;
  { b.matrix(f) } -> std::convertible_to<Matrix>;

  { b.embed(m) } -> std::same_as<typename B::Arrow>;
  { b.extract(f) } -> std::same_as<matcat::Morphism>;

  // Arrows from matrix literals; `pure` asks for the pure process with that
  // matrix where the backend distinguishes one.
  { b.from_matrix(o, o, mat, true) } -> std::same_as<typename B::Arrow>;
  { b.random_arrow(o, o, rng, true) } -> std::same_as<typename B::Arrow>;
  // A random sharp preparation/observation pair X -> H -> X.
  { b.random_spo(x, o, rng) }
      -> std::same_as<std::pair<typename B::Arrow, typename B::Arrow>>;
};

// Mat(R) as a backend: S = R.
class ClassicalBackend {
 public:
  using Object = matcat::ClassicalObject;
  using Arrow = matcat::Morphism;

  explicit ClassicalBackend(Semiring s) : s_(std::move(s)) {}

  std::string name() const { return "classical " + s_.id(); }
  const Semiring& semiring() const { return s_; }
  const Semiring& scalars() const { return s_; }

  Object unit() const { return Object::unit(); }
  Object tensor(const Object& a, const Object& b) const {
    return matcat::tensor(a, b);
  }
  Object classical(const matcat::ClassicalObject& x) const { return x; }
  bool same_object(const Object& a, const Object& b) const { return a == b; }
  std::string describe(const Object& a) const { return a.to_string(); }
  std::size_t dim(const Object& a) const { return a.size(); }
  Object random_object(std::mt19937_64& rng) const {
    return Object::range(1 + rng() % 3);
  }

  const Object& dom(const Arrow& f) const { return f.dom(); }
  const Object& cod(const Arrow& f) const { return f.cod(); }
  Arrow identity(const Object& a) const { return matcat::identity(s_, a); }
  Arrow zero(const Object& a, const Object& b) const {
    return matcat::zero(s_, a, b);
  }
  Arrow compose(const Arrow& g, const Arrow& f) const {
    return matcat::compose(g, f);
  }
  Arrow tensor(const Arrow& f, const Arrow& g) const {
    return matcat::tensor(f, g);
  }
  Arrow sum(const Arrow& f, const Arrow& g) const { return matcat::sum(f, g); }
  Arrow scale(const Element& r, const Arrow& f) const {
    return matcat::scale(r, f);
  }
  Arrow swap(const Object& a, const Object& b) const {
    return matcat::swap(s_, a, b);
  }
  Arrow discard(const Object& a) const { return matcat::discard(s_, a); }
  bool equal(const Arrow& f, const Arrow& g) const {
    return matcat::equal(f, g);
  }
  bool is_normalised(const Arrow& f) const { return matcat::is_normalised(f); }
  const Matrix& matrix(const Arrow& f) const { return f.matrix(); }

  Arrow embed(const matcat::Morphism& m) const;
  matcat::Morphism extract(const Arrow& f) const { return f; }

  Arrow from_matrix(const Object& dom, const Object& cod, const Matrix& m,
                    bool pure) const;
  Arrow random_arrow(const Object& dom, const Object& cod, std::mt19937_64& rng,
                     bool normalised) const;
  std::pair<Arrow, Arrow> random_spo(const matcat::ClassicalObject& x,
                                     const Object& h,
                                     std::mt19937_64& rng) const;

 private:
  Semiring s_;
};

namespace matcat {

// A random matrix whose columns all sum to one. Over bool each column has at
// least one 1, over nat exactly one, over ratnn and complex-f64 the entries are
// small nonnegative fractions; elsewhere the last row absorbs the difference.
Matrix random_normalised_matrix(const Semiring& s, std::size_t rows,
                                std::size_t cols, std::mt19937_64& rng);

// A uniformly random permutation of {0, ..., n-1}.
std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng);

}  // namespace matcat

}  // namespace catprob
