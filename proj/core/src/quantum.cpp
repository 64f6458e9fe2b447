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

#include "catprob/quantum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "catprob/error.hpp"
#include "catprob/linalg.hpp"

namespace catprob::quantum {

namespace {

using Index = Eigen::Index;

// mask[i * d + i'] is set when (i, i') agrees on every wire selected by
// `pick`.
template <typename Pick>
std::vector<char> diagonal_mask(const QSystem& a, Pick pick) {
  const std::size_t d = a.dim();
  std::vector<char> mask(d * d, 1);
  std::size_t stride = d;
  for (const Wire& w : a.wires()) {
    stride /= w.dim();
    if (!pick(w)) continue;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if ((i / stride) % w.dim() != (j / stride) % w.dim()) mask[i * d + j] = 0;
      }
    }
  }
  return mask;
}

std::vector<char> classical_mask(const QSystem& a) {
  return diagonal_mask(a, [](const Wire& w) { return w.kind == WireKind::kClassical; });
}

std::vector<char> full_mask(const QSystem& a) {
  return diagonal_mask(a, [](const Wire&) { return true; });
}

// Nonzero entries only inside the masked rows and columns.
bool supported_on(const Matrix& m, const std::vector<char>& rows,
                  const std::vector<char>& cols) {
  const Semiring& s = m.semiring();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if ((!rows[r] || !cols[c]) && !s.is_zero(m(r, c))) return false;
    }
  }
  return true;
}

Matrix conjugate(const Matrix& f) { return transpose(adjoint(f)); }

Matrix diagonal(const Semiring& s, const std::vector<char>& mask) {
  Matrix m(s, mask.size(), mask.size());
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) m.set(i, i, s.one());
  }
  return m;
}

void require_same_semiring(const Superoperator& f, const Superoperator& g) {
  if (!(f.semiring() == g.semiring())) {
    fail(ErrorCode::kSemiringMismatch,
         f.semiring().id() + " vs " + g.semiring().id());
  }
}

void require_quantum(const Superoperator& f, const char* what) {
  if (!f.dom().all_quantum() || !f.cod().all_quantum()) {
    fail(ErrorCode::kInvalidArgument,
         std::string(what) + " needs quantum wires only, got " +
             f.dom().to_string() + " -> " + f.cod().to_string());
  }
}

Matrix permutation_matrix(const Semiring& s, const std::vector<std::size_t>& p) {
  Matrix m(s, p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m.set(p[i], i, s.one());
  return m;
}

Element to_semiring(const Element& x, const Semiring& from, const Semiring& to) {
  if (from == to) return x;
  auto v = catprob::convert(x, from, to);
  if (!v) {
    fail(ErrorCode::kSemiringMismatch,
         from.format(x) + " is not an element of " + to.id());
  }
  return *v;
}

Eigen::MatrixXcd to_eigen(const Matrix& m) {
  Eigen::MatrixXcd out(static_cast<Index>(m.rows()), static_cast<Index>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out(static_cast<Index>(r), static_cast<Index>(c)) =
          m.semiring().to_complex(m(r, c));
    }
  }
  return out;
}

Matrix from_eigen(const Semiring& s, const Eigen::MatrixXcd& m) {
  Matrix out(s, static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      out.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), m(r, c));
    }
  }
  return out;
}

}  // namespace

QSystem::QSystem(std::vector<Wire> wires) : wires_(std::move(wires)) {}

QSystem QSystem::quantum(std::size_t d) {
  return QSystem({Wire{WireKind::kQuantum, matcat::ClassicalObject::range(d)}});
}

QSystem QSystem::classical(const matcat::ClassicalObject& x) {
  if (x.is_unit()) return QSystem();
  return QSystem({Wire{WireKind::kClassical, x}});
}

std::size_t QSystem::dim() const {
  std::size_t d = 1;
  for (const Wire& w : wires_) d *= w.dim();
  return d;
}

bool QSystem::all_quantum() const {
  return std::all_of(wires_.begin(), wires_.end(),
                     [](const Wire& w) { return w.kind == WireKind::kQuantum; });
}

bool QSystem::all_classical() const {
  return std::all_of(wires_.begin(), wires_.end(),
                     [](const Wire& w) { return w.kind == WireKind::kClassical; });
}

matcat::ClassicalObject QSystem::basis() const {
  matcat::ClassicalObject out = matcat::ClassicalObject::unit();
  for (const Wire& w : wires_) out = matcat::tensor(out, w.basis);
  return out;
}

QSystem QSystem::decohered() const {
  std::vector<Wire> wires = wires_;
  for (Wire& w : wires) w.kind = WireKind::kClassical;
  return QSystem(std::move(wires));
}

std::string QSystem::to_string() const {
  if (wires_.empty()) return "I";
  std::string out;
  for (const Wire& w : wires_) {
    if (!out.empty()) out += " * ";
    out += w.kind == WireKind::kQuantum ? "Q" + std::to_string(w.dim())
                                        : "C" + w.basis.to_string();
  }
  return out;
}

QSystem tensor(const QSystem& a, const QSystem& b) {
  std::vector<Wire> wires = a.wires();
  wires.insert(wires.end(), b.wires().begin(), b.wires().end());
  return QSystem(std::move(wires));
}

Superoperator::Superoperator(QSystem dom, QSystem cod, Matrix entries)
    : dom_(std::move(dom)), cod_(std::move(cod)), entries_(std::move(entries)) {
  if (entries_.rows() != cod_.doubled_dim() ||
      entries_.cols() != dom_.doubled_dim()) {
    fail(ErrorCode::kShapeMismatch,
         "superoperator " + dom_.to_string() + " -> " + cod_.to_string() +
             " needs a " + std::to_string(cod_.doubled_dim()) + "x" +
             std::to_string(dom_.doubled_dim()) + " matrix");
  }
  if (!(dom_.all_quantum() && cod_.all_quantum()) &&
      !supported_on(entries_, classical_mask(cod_), classical_mask(dom_))) {
    fail(ErrorCode::kNotDecohered,
         "weight off the diagonal of a classical wire in " + dom_.to_string() +
             " -> " + cod_.to_string());
  }
}

std::string Superoperator::to_string() const {
  return dom_.to_string() + " -> " + cod_.to_string() + " " + entries_.to_string();
}

bool equal(const Superoperator& f, const Superoperator& g) {
  return f.dom() == g.dom() && f.cod() == g.cod() &&
         catprob::equal(f.matrix(), g.matrix());
}

Superoperator double_pure(const Matrix& f, const QSystem& dom,
                          const QSystem& cod) {
  return Superoperator(dom, cod, kron(f, conjugate(f)));
}

Superoperator double_pure(const Matrix& f) {
  return double_pure(f, QSystem::quantum(f.cols()), QSystem::quantum(f.rows()));
}

Superoperator identity(const Semiring& s, const QSystem& a) {
  return Superoperator(a, a, diagonal(s, classical_mask(a)));
}

Superoperator zero(const Semiring& s, const QSystem& a, const QSystem& b) {
  return Superoperator(a, b, Matrix(s, b.doubled_dim(), a.doubled_dim()));
}

Superoperator compose(const Superoperator& g, const Superoperator& f) {
  require_same_semiring(f, g);
  if (!(f.cod() == g.dom())) {
    fail(ErrorCode::kShapeMismatch, "codomain " + f.cod().to_string() +
                                        " does not match domain " +
                                        g.dom().to_string());
  }
  return Superoperator(f.dom(), g.cod(), multiply(g.matrix(), f.matrix()));
}

Superoperator tensor(const Superoperator& f, const Superoperator& g) {
  require_same_semiring(f, g);
  const Semiring& s = f.semiring();
  const std::size_t a = f.dom().dim(), b = f.cod().dim();
  const std::size_t c = g.dom().dim(), d = g.cod().dim();
  Matrix out(s, b * d * b * d, a * c * a * c);
  const Matrix& fm = f.matrix();
  const Matrix& gm = g.matrix();
  for (std::size_t fr = 0; fr < b * b; ++fr) {
    const std::size_t y1 = fr / b, y1p = fr % b;
    for (std::size_t fc = 0; fc < a * a; ++fc) {
      const Element& fv = fm(fr, fc);
      if (s.exact() && s.is_zero(fv)) continue;
      const std::size_t x1 = fc / a, x1p = fc % a;
      for (std::size_t gr = 0; gr < d * d; ++gr) {
        const std::size_t y2 = gr / d, y2p = gr % d;
        const std::size_t row = (y1 * d + y2) * (b * d) + (y1p * d + y2p);
        for (std::size_t gc = 0; gc < c * c; ++gc) {
          const std::size_t x2 = gc / c, x2p = gc % c;
          const std::size_t col = (x1 * c + x2) * (a * c) + (x1p * c + x2p);
          out.set(row, col, s.mul(fv, gm(gr, gc)));
        }
      }
    }
  }
  return Superoperator(tensor(f.dom(), g.dom()), tensor(f.cod(), g.cod()),
                       std::move(out));
}

Superoperator sum(const Superoperator& f, const Superoperator& g) {
  require_same_semiring(f, g);
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) {
    fail(ErrorCode::kShapeMismatch, "summands have different types");
  }
  return Superoperator(f.dom(), f.cod(), add(f.matrix(), g.matrix()));
}

Superoperator scale(const Element& s, const Superoperator& f) {
  return Superoperator(f.dom(), f.cod(), catprob::scale(s, f.matrix()));
}

Superoperator swap(const Semiring& s, const QSystem& a, const QSystem& b) {
  const std::size_t da = a.dim(), db = b.dim();
  Matrix p(s, da * db, da * db);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < db; ++j) p.set(j * da + i, i * db + j, s.one());
  }
  const QSystem ab = tensor(a, b);
  const QSystem ba = tensor(b, a);
  const Matrix doubled = multiply(kron(p, p), diagonal(s, classical_mask(ab)));
  return Superoperator(ab, ba, doubled);
}

Superoperator quantum_discard(const Semiring& s, const QSystem& a) {
  const std::size_t d = a.dim();
  Matrix m(s, 1, d * d);
  for (std::size_t i = 0; i < d; ++i) m.set(0, i * d + i, s.one());
  return Superoperator(a, QSystem(), std::move(m));
}

bool is_trace_preserving(const Superoperator& f) {
  const Semiring& s = f.semiring();
  return equal(compose(quantum_discard(s, f.cod()), f),
               quantum_discard(s, f.dom()));
}

Superoperator decoherence_superop(const Semiring& s, const QSystem& a) {
  return Superoperator(a, a, diagonal(s, full_mask(a)));
}

Superoperator classical_projector(const Semiring& s, const QSystem& a) {
  return identity(s, a);
}

Superoperator reinterpret(const Superoperator& f, const QSystem& dom,
                          const QSystem& cod) {
  if (dom.dim() != f.dom().dim() || cod.dim() != f.cod().dim()) {
    fail(ErrorCode::kShapeMismatch, "cannot view " + f.dom().to_string() +
                                        " -> " + f.cod().to_string() + " as " +
                                        dom.to_string() + " -> " + cod.to_string());
  }
  return Superoperator(dom, cod, f.matrix());
}

Matrix KrausFamily::dilation() const {
  if (elements.empty()) fail(ErrorCode::kInvalidArgument, "empty Kraus family");
  const Semiring& s = elements.front().semiring();
  const std::size_t e_dim = elements.size();
  Matrix f(s, cod.dim() * e_dim, dom.dim());
  for (std::size_t e = 0; e < e_dim; ++e) {
    for (std::size_t c = 0; c < cod.dim(); ++c) {
      for (std::size_t x = 0; x < dom.dim(); ++x) {
        f.set(c * e_dim + e, x, elements[e](c, x));
      }
    }
  }
  return f;
}

KrausFamily KrausFamily::from_dilation(const Matrix& f, const QSystem& dom,
                                       const QSystem& cod, std::size_t env_dim) {
  if (env_dim == 0 || f.rows() != cod.dim() * env_dim || f.cols() != dom.dim()) {
    fail(ErrorCode::kShapeMismatch, "dilation shape does not match systems");
  }
  KrausFamily k{dom, cod, {}};
  for (std::size_t e = 0; e < env_dim; ++e) {
    Matrix m(f.semiring(), cod.dim(), dom.dim());
    for (std::size_t c = 0; c < cod.dim(); ++c) {
      for (std::size_t x = 0; x < dom.dim(); ++x) m.set(c, x, f(c * env_dim + e, x));
    }
    k.elements.push_back(std::move(m));
  }
  return k;
}

Superoperator cpm_from_kraus(const KrausFamily& k) {
  if (k.elements.empty()) fail(ErrorCode::kInvalidArgument, "empty Kraus family");
  const Semiring& s = k.elements.front().semiring();
  Matrix total(s, k.cod.doubled_dim(), k.dom.doubled_dim());
  for (const Matrix& e : k.elements) {
    if (e.rows() != k.cod.dim() || e.cols() != k.dom.dim()) {
      fail(ErrorCode::kShapeMismatch,
           "Kraus element is " + std::to_string(e.rows()) + "x" +
               std::to_string(e.cols()) + ", expected " +
               std::to_string(k.cod.dim()) + "x" + std::to_string(k.dom.dim()));
    }
    total = add(total, kron(e, conjugate(e)));
  }
  // Classical wires are decohered on both sides.
  if (!k.dom.all_quantum() || !k.cod.all_quantum()) {
    total = multiply(diagonal(s, classical_mask(k.cod)),
                     multiply(total, diagonal(s, classical_mask(k.dom))));
  }
  return Superoperator(k.dom, k.cod, std::move(total));
}

bool is_decohered(const Superoperator& f) {
  return supported_on(f.matrix(), full_mask(f.cod()), full_mask(f.dom()));
}

matcat::Morphism classical_extract(const Superoperator& f, const Semiring& r) {
  if (!is_decohered(f)) {
    fail(ErrorCode::kNotDecohered,
         "superoperator is not invariant under decoherence");
  }
  const Semiring& s = f.semiring();
  const std::size_t dx = f.dom().dim(), dy = f.cod().dim();
  Matrix out(r, dy, dx);
  for (std::size_t y = 0; y < dy; ++y) {
    for (std::size_t x = 0; x < dx; ++x) {
      const Element& v = f.matrix()(y * dy + y, x * dx + x);
      if (!s.exact()) {
        const std::complex<double> z = s.to_complex(v);
        if (std::abs(z.imag()) > s.tolerance() || z.real() < -s.tolerance()) {
          fail(ErrorCode::kTolerance,
               "entry " + s.format(v) + " is not a nonnegative real");
        }
        out.set(y, x, to_semiring(std::complex<double>(z.real(), 0.0), s, r));
      } else {
        out.set(y, x, to_semiring(v, s, r));
      }
    }
  }
  return matcat::Morphism(f.dom().basis(), f.cod().basis(), std::move(out));
}

Superoperator classical_embed(const matcat::Morphism& big_f, const Semiring& s) {
  const QSystem dom = QSystem::classical(big_f.dom());
  const QSystem cod = QSystem::classical(big_f.cod());
  const std::size_t dx = dom.dim(), dy = cod.dim();
  Matrix m(s, dy * dy, dx * dx);
  for (std::size_t y = 0; y < dy; ++y) {
    for (std::size_t x = 0; x < dx; ++x) {
      m.set(y * dy + y, x * dx + x, to_semiring(big_f(y, x), big_f.semiring(), s));
    }
  }
  return Superoperator(dom, cod, std::move(m));
}

Matrix choi(const Superoperator& f) {
  const std::size_t dx = f.dom().dim(), dy = f.cod().dim();
  Matrix c(f.semiring(), dy * dx, dy * dx);
  for (std::size_t y = 0; y < dy; ++y) {
    for (std::size_t yp = 0; yp < dy; ++yp) {
      for (std::size_t x = 0; x < dx; ++x) {
        for (std::size_t xp = 0; xp < dx; ++xp) {
          c.set(y * dx + x, yp * dx + xp, f.matrix()(y * dy + yp, x * dx + xp));
        }
      }
    }
  }
  return c;
}

bool is_pure_choi(const Superoperator& f) {
  require_quantum(f, "purity test");
  const Semiring& s = f.semiring();
  if (s.exact() && !s.is_field() && s.kind() != SemiringKind::kRatNonNeg) {
    fail(ErrorCode::kUnsupported, "Choi rank needs a field, got " + s.id());
  }
  return linalg::rank(choi(f)) <= 1;
}

KrausFamily purify(const Superoperator& f) {
  const Semiring& s = f.semiring();
  if (s.exact()) {
    fail(ErrorCode::kUnsupportedMode, "purification needs complex-f64, got " + s.id());
  }
  require_quantum(f, "purification");
  const double tol = s.tolerance();
  const Eigen::MatrixXcd c = to_eigen(choi(f));
  if ((c - c.adjoint()).cwiseAbs().maxCoeff() > tol) {
    fail(ErrorCode::kNotCp, "Choi matrix is not Hermitian");
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(
      (c + c.adjoint()) / 2.0);
  if (eig.info() != Eigen::Success) {
    fail(ErrorCode::kNotCp, "eigendecomposition did not converge");
  }
  if (eig.eigenvalues().minCoeff() < -tol) {
    fail(ErrorCode::kNotCp, "Choi matrix has eigenvalue " +
                                std::to_string(eig.eigenvalues().minCoeff()));
  }

  struct Component {
    double lambda;
    Eigen::VectorXcd v;
  };
  std::vector<Component> parts;
  for (Index i = 0; i < eig.eigenvalues().size(); ++i) {
    const double lambda = eig.eigenvalues()(i);
    if (lambda <= tol) continue;
    Eigen::VectorXcd v = eig.eigenvectors().col(i);
    // Fix the global phase: first non-negligible component real positive.
    for (Index k = 0; k < v.size(); ++k) {
      if (std::abs(v(k)) > tol) {
        v *= std::conj(v(k)) / std::abs(v(k));
        break;
      }
    }
    parts.push_back({lambda, std::move(v)});
  }
  auto lex_less = [](const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    for (Index k = 0; k < a.size(); ++k) {
      if (a(k).real() != b(k).real()) return a(k).real() < b(k).real();
      if (a(k).imag() != b(k).imag()) return a(k).imag() < b(k).imag();
    }
    return false;
  };
  std::stable_sort(parts.begin(), parts.end(),
                   [&](const Component& a, const Component& b) {
                     if (std::abs(a.lambda - b.lambda) > tol) {
                       return a.lambda > b.lambda;
                     }
                     return lex_less(a.v, b.v);
                   });

  const std::size_t dx = f.dom().dim(), dy = f.cod().dim();
  KrausFamily k{f.dom(), f.cod(), {}};
  for (const Component& part : parts) {
    Matrix m(s, dy, dx);
    const double root = std::sqrt(part.lambda);
    for (std::size_t y = 0; y < dy; ++y) {
      for (std::size_t x = 0; x < dx; ++x) {
        m.set(y, x, root * part.v(static_cast<Index>(y * dx + x)));
      }
    }
    k.elements.push_back(std::move(m));
  }
  if (k.elements.empty()) k.elements.emplace_back(s, dy, dx);
  return k;
}

Matrix random_unitary(const Semiring& s, std::size_t d, std::mt19937_64& rng) {
  if (!s.exact()) {
    std::normal_distribution<double> gauss;
    Eigen::MatrixXcd g(static_cast<Index>(d), static_cast<Index>(d));
    for (Index r = 0; r < g.rows(); ++r) {
      for (Index c = 0; c < g.cols(); ++c) g(r, c) = {gauss(rng), gauss(rng)};
    }
    const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index i = 0; i < q.cols(); ++i) {
      const std::complex<double> rii = r(i, i);
      if (std::abs(rii) > 0) q.col(i) *= rii / std::abs(rii);
    }
    return from_eigen(s, q);
  }

  Matrix u = permutation_matrix(s, matcat::random_permutation(d, rng));
  if (s.has_additive_inverses()) {
    // Cayley transform (I - A)(I + A)^-1 of an anti-Hermitian A = B - B^dag.
    const Matrix ident = Matrix::identity(s, d);
    for (int attempt = 0; attempt < 16; ++attempt) {
      const Matrix b = Matrix::random(s, d, d, rng);
      Matrix a = add(b, catprob::scale(s.negate(s.one()), adjoint(b)));
      const auto inv = linalg::inverse(add(ident, a));
      if (!inv) continue;
      const Matrix minus = add(ident, catprob::scale(s.negate(s.one()), a));
      u = multiply(u, multiply(minus, *inv));
      break;
    }
  }
  if (auto all = s.enumerate()) {
    // Unit-norm phases z* z = 1.
    std::vector<Element> phases;
    for (const Element& z : *all) {
      if (s.equal(s.mul(s.conj(z), z), s.one())) phases.push_back(z);
    }
    Matrix diag(s, d, d);
    for (std::size_t i = 0; i < d; ++i) diag.set(i, i, phases[rng() % phases.size()]);
    u = multiply(u, diag);
  }
  if (!catprob::equal(multiply(u, adjoint(u)), Matrix::identity(s, d))) {
    fail(ErrorCode::kInvalidArgument, "generated matrix is not unitary over " + s.id());
  }
  return u;
}

KrausFamily random_channel(const Semiring& s, const QSystem& dom,
                           const QSystem& cod, std::mt19937_64& rng) {
  const std::size_t n = dom.dim(), m = cod.dim();
  const std::size_t env = (n + m - 1) / m + rng() % 2;
  const Matrix u = random_unitary(s, m * env, rng);
  Matrix isometry(s, m * env, n);
  for (std::size_t r = 0; r < m * env; ++r) {
    for (std::size_t c = 0; c < n; ++c) isometry.set(r, c, u(r, c));
  }
  return KrausFamily::from_dilation(isometry, dom, cod, env);
}

KrausFamily random_kraus(const Semiring& s, const QSystem& dom,
                         const QSystem& cod, std::size_t count,
                         std::mt19937_64& rng) {
  KrausFamily k{dom, cod, {}};
  for (std::size_t i = 0; i < count; ++i) {
    k.elements.push_back(Matrix::random(s, cod.dim(), dom.dim(), rng));
  }
  return k;
}

QuantumBackend::QuantumBackend(std::string name, Semiring s, Semiring r)
    : name_(std::move(name)), s_(std::move(s)), r_(std::move(r)) {}

QSystem QuantumBackend::random_object(std::mt19937_64& rng) const {
  switch (rng() % 4) {
    case 0:
      return QSystem::quantum(1);
    case 1:
      return QSystem::quantum(2);
    case 2:
      return QSystem::classical(matcat::ClassicalObject::range(2));
    default:
      return QSystem::classical(matcat::ClassicalObject::range(1 + rng() % 2));
  }
}

Superoperator QuantumBackend::scale(const Element& r, const Superoperator& f) const {
  return quantum::scale(to_semiring(r, r_, s_), f);
}

Superoperator QuantumBackend::from_matrix(const QSystem& dom, const QSystem& cod,
                                          const Matrix& m, bool pure) const {
  const Matrix entries = catprob::convert(m, s_);
  if (pure) return cpm_from_kraus(KrausFamily{dom, cod, {entries}});
  return Superoperator(dom, cod, entries);
}

Superoperator QuantumBackend::random_arrow(const QSystem& dom, const QSystem& cod,
                                           std::mt19937_64& rng,
                                           bool normalised) const {
  if (normalised) return cpm_from_kraus(random_channel(s_, dom, cod, rng));
  return cpm_from_kraus(random_kraus(s_, dom, cod, 1 + rng() % 2, rng));
}

std::pair<Superoperator, Superoperator> QuantumBackend::random_spo(
    const matcat::ClassicalObject& x, const QSystem& h,
    std::mt19937_64& rng) const {
  const std::size_t k = x.size(), n = h.dim();
  if (k > n) {
    fail(ErrorCode::kInvalidArgument,
         "a sharp pair needs |X| <= dim H, got " + std::to_string(k) + " > " +
             std::to_string(n));
  }
  const QSystem xs = classical(x);
  const std::vector<std::size_t> slot = matcat::random_permutation(n, rng);
  // m sends slot x back to x and the remaining basis states anywhere.
  Matrix post = matcat::random_normalised_matrix(r_, k, n, rng);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t r = 0; r < k; ++r) {
      post.set(r, slot[i], r == i ? r_.one() : r_.zero());
    }
  }
  const matcat::Morphism decode(h.basis(), x, std::move(post));

  if (!h.all_quantum()) {
    // Classical wires cannot carry coherences: encode x as the basis state
    // slot x and decode by the classical map above.
    Matrix j(r_, n, k);
    for (std::size_t i = 0; i < k; ++i) j.set(slot[i], i, r_.one());
    const matcat::Morphism encode(x, h.basis(), std::move(j));
    return {reinterpret(classical_embed(encode, s_), xs, h),
            reinterpret(classical_embed(decode, s_), h, xs)};
  }

  const Matrix u = random_unitary(s_, n, rng);
  Matrix j(s_, n, k);
  for (std::size_t i = 0; i < k; ++i) j.set(slot[i], i, s_.one());

  // p: |x><x| -> U |slot x><slot x| U^dag.
  const Superoperator prep =
      compose(double_pure(multiply(u, j), QSystem::quantum(k), h),
              reinterpret(decoherence_superop(s_, QSystem::quantum(k)), xs,
                          QSystem::quantum(k)));

  // m: undo U, measure in the computational basis, decode.
  const Superoperator measure = reinterpret(
      compose(decoherence_superop(s_, h), double_pure(adjoint(u), h, h)), h,
      classical(h.basis()));
  const Superoperator obs = compose(classical_embed(decode, s_), measure);
  return {prep, obs};
}

}  // namespace catprob::quantum
