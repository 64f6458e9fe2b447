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

// The doubled (CPM) quantum theory over an involutive semiring S.
//
// A system is a list of wires, each quantum or classical, with a finite basis.
// A process A -> B is a superoperator: a (dim B)^2 x (dim A)^2 matrix over S
// acting on vectorised density matrices, with the doubled index (i, i')
// linearised as i * dim + i' where i is the row-major composite basis index
// of all wires. Pure maps f double to kron(f, conj f). Classical wires carry
// the same doubled index but every process must vanish off their diagonal,
// which is checked when a superoperator is built.

#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "catprob/backend.hpp"
#include "catprob/matcat.hpp"
#include "catprob/matrix.hpp"

namespace catprob::quantum {

enum class WireKind { kQuantum, kClassical };

struct Wire {
  WireKind kind;
  matcat::ClassicalObject basis;

  std::size_t dim() const { return basis.size(); }
  friend bool operator==(const Wire&, const Wire&) = default;
};

class QSystem {
 public:
  // The unit: no wires, dimension one.
  QSystem() = default;
  explicit QSystem(std::vector<Wire> wires);

  static QSystem quantum(std::size_t d);
  // A single classical wire; the unit object maps to the unit system.
  static QSystem classical(const matcat::ClassicalObject& x);

  const std::vector<Wire>& wires() const { return wires_; }
  std::size_t dim() const;
  std::size_t doubled_dim() const { return dim() * dim(); }
  bool is_unit() const { return wires_.empty(); }
  bool all_quantum() const;
  bool all_classical() const;
  // The composite basis as a classical object (the unit for no wires).
  matcat::ClassicalObject basis() const;
  // Same wires, all classical.
  QSystem decohered() const;
  std::string to_string() const;

  friend bool operator==(const QSystem&, const QSystem&) = default;

 private:
  std::vector<Wire> wires_;
};

QSystem tensor(const QSystem& a, const QSystem& b);

class Superoperator {
 public:
  // Throws kShapeMismatch for a wrong matrix size and kNotDecohered if the
  // matrix has weight off the diagonal of a classical wire.
  Superoperator(QSystem dom, QSystem cod, Matrix entries);

  const QSystem& dom() const { return dom_; }
  const QSystem& cod() const { return cod_; }
  const Matrix& matrix() const { return entries_; }
  const Semiring& semiring() const { return entries_.semiring(); }

  std::string to_string() const;

 private:
  QSystem dom_;
  QSystem cod_;
  Matrix entries_;
};

bool equal(const Superoperator& f, const Superoperator& g);

// double(f)[(y,y'),(x,x')] = f[y,x] * f[y',x']*.
Superoperator double_pure(const Matrix& f, const QSystem& dom,
                          const QSystem& cod);
// Same, between quantum wires of the matching dimensions.
Superoperator double_pure(const Matrix& f);

Superoperator identity(const Semiring& s, const QSystem& a);
Superoperator zero(const Semiring& s, const QSystem& a, const QSystem& b);
// g after f.
Superoperator compose(const Superoperator& g, const Superoperator& f);
Superoperator tensor(const Superoperator& f, const Superoperator& g);
Superoperator sum(const Superoperator& f, const Superoperator& g);
Superoperator scale(const Element& s, const Superoperator& f);
Superoperator swap(const Semiring& s, const QSystem& a, const QSystem& b);

// The trace: ones at the doubled diagonal i * d + i.
Superoperator quantum_discard(const Semiring& s, const QSystem& a);
bool is_trace_preserving(const Superoperator& f);

// Standard-basis decoherence on every wire of `a`.
Superoperator decoherence_superop(const Semiring& s, const QSystem& a);
// Decoherence on the classical wires of `a` only; the identity when `a` is
// all quantum. Every superoperator on `a` is invariant under it.
Superoperator classical_projector(const Semiring& s, const QSystem& a);

// Same matrix between other systems of the same dimensions.
Superoperator reinterpret(const Superoperator& f, const QSystem& dom,
                          const QSystem& cod);

// A family of pure maps dom -> cod over S; the environment is indexed by
// position in the family.
struct KrausFamily {
  QSystem dom;
  QSystem cod;
  std::vector<Matrix> elements;

  std::size_t env_dim() const { return elements.size(); }
  // The pure map dom -> cod (x) env, row (c, e) at c * env_dim + e.
  Matrix dilation() const;
  static KrausFamily from_dilation(const Matrix& f, const QSystem& dom,
                                   const QSystem& cod, std::size_t env_dim);
};

// Sum of double(K_e): the environment leg doubled and traced out.
Superoperator cpm_from_kraus(const KrausFamily& k);

// Invariant under decoherence of every wire on both sides.
bool is_decohered(const Superoperator& f);
// F[y,x] = f[(y,y),(x,x)], as a matrix over `r`.
matcat::Morphism classical_extract(const Superoperator& f, const Semiring& r);
// f[(y,y'),(x,x')] = [y=y'][x=x'] F[y,x], as a superoperator over `s`
// between single classical wires.
Superoperator classical_embed(const matcat::Morphism& big_f, const Semiring& s);

// Choi[(y,x),(y',x')] = f[(y,y'),(x,x')].
Matrix choi(const Superoperator& f);
// Choi rank at most one. Needs a field (ratnn is lifted to rat) or
// approximate mode; quantum wires only.
bool is_pure_choi(const Superoperator& f);
// Kraus elements from the eigendecomposition of the Choi matrix, eigenvalues
// descending. complex-f64 only; kNotCp if the Choi matrix has an eigenvalue
// below -tolerance.
KrausFamily purify(const Superoperator& f);

// A random unitary over `s`: Cayley transforms of anti-Hermitian matrices
// where S has additive inverses, mixed with permutations and unit-norm
// phases; permutations alone over bool, nat and ratnn. QR of a Gaussian
// matrix in approximate mode.
Matrix random_unitary(const Semiring& s, std::size_t d, std::mt19937_64& rng);
// A trace-preserving Kraus family built from the columns of a random unitary
// on cod (x) env.
KrausFamily random_channel(const Semiring& s, const QSystem& dom,
                           const QSystem& cod, std::mt19937_64& rng);
// `count` Kraus elements with independent random entries.
KrausFamily random_kraus(const Semiring& s, const QSystem& dom,
                         const QSystem& cod, std::size_t count,
                         std::mt19937_64& rng);

// The doubled theory as a backend: entries in S, scalars in R.
class QuantumBackend {
 public:
  using Object = QSystem;
  using Arrow = Superoperator;

  QuantumBackend(std::string name, Semiring s, Semiring r);

  const std::string& name() const { return name_; }
  const Semiring& semiring() const { return s_; }
  const Semiring& scalars() const { return r_; }

  Object unit() const { return QSystem(); }
  Object tensor(const Object& a, const Object& b) const {
    return quantum::tensor(a, b);
  }
  Object classical(const matcat::ClassicalObject& x) const {
    return QSystem::classical(x);
  }
  bool same_object(const Object& a, const Object& b) const { return a == b; }
  std::string describe(const Object& a) const { return a.to_string(); }
  std::size_t dim(const Object& a) const { return a.dim(); }
  Object random_object(std::mt19937_64& rng) const;

  const Object& dom(const Arrow& f) const { return f.dom(); }
  const Object& cod(const Arrow& f) const { return f.cod(); }
  Arrow identity(const Object& a) const { return quantum::identity(s_, a); }
  Arrow zero(const Object& a, const Object& b) const {
    return quantum::zero(s_, a, b);
  }
  Arrow compose(const Arrow& g, const Arrow& f) const {
    return quantum::compose(g, f);
  }
  Arrow tensor(const Arrow& f, const Arrow& g) const {
    return quantum::tensor(f, g);
  }
  Arrow sum(const Arrow& f, const Arrow& g) const { return quantum::sum(f, g); }
  Arrow scale(const Element& r, const Arrow& f) const;
  Arrow swap(const Object& a, const Object& b) const {
    return quantum::swap(s_, a, b);
  }
  Arrow discard(const Object& a) const { return quantum_discard(s_, a); }
  bool equal(const Arrow& f, const Arrow& g) const {
    return quantum::equal(f, g);
  }
  bool is_normalised(const Arrow& f) const { return is_trace_preserving(f); }
  const Matrix& matrix(const Arrow& f) const { return f.matrix(); }

  Arrow embed(const matcat::Morphism& m) const {
    return classical_embed(m, s_);
  }
  matcat::Morphism extract(const Arrow& f) const {
    return classical_extract(f, r_);
  }

  // pure: double the given pure matrix; otherwise the matrix is taken as the
  // superoperator itself.
  Arrow from_matrix(const Object& dom, const Object& cod, const Matrix& m,
                    bool pure) const;
  Arrow random_arrow(const Object& dom, const Object& cod, std::mt19937_64& rng,
                     bool normalised) const;
  // p prepares the images of X under a random unitary, m measures in that
  // basis and post-processes; m . p = id and both are trace-preserving.
  std::pair<Arrow, Arrow> random_spo(const matcat::ClassicalObject& x,
                                     const Object& h,
                                     std::mt19937_64& rng) const;

 private:
  std::string name_;
  Semiring s_;
  Semiring r_;
};

}  // namespace catprob::quantum
