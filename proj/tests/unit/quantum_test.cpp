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

#include <gtest/gtest.h>

#include <random>

#include "catprob/error.hpp"
#include "catprob/self_test.hpp"
#include "catprob/toy_theory.hpp"
#include "support/oracle.hpp"

namespace catprob::quantum {
namespace {

const Semiring kC = Semiring::gauss_rat();

Matrix lit(const Semiring& s, std::vector<std::vector<std::string>> rows) {
  return Matrix::from_literals(s, rows);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidArgument;
}

// f (rho) = sum_e K rho K^dag on an explicit density matrix.
oracle::Dense apply_kraus(const Semiring& s, const std::vector<Matrix>& kraus,
                          const oracle::Dense& rho) {
  const std::size_t out = kraus[0].rows();
  oracle::Dense acc(out, std::vector<Element>(out, s.zero()));
  for (const Matrix& k : kraus) {
    const auto kd = oracle::dense(k);
    const auto kdag = oracle::dense(adjoint(k));
    const auto term = oracle::mul(s, oracle::mul(s, kd, rho), kdag);
    for (std::size_t r = 0; r < out; ++r) {
      for (std::size_t c = 0; c < out; ++c) acc[r][c] = s.add(acc[r][c], term[r][c]);
    }
  }
  return acc;
}

// Column (x, x') of a superoperator applied to the matrix unit |x><x'|.
oracle::Dense apply_superop(const Superoperator& f, const oracle::Dense& rho) {
  const Semiring& s = f.semiring();
  const std::size_t dx = f.dom().dim(), dy = f.cod().dim();
  oracle::Dense out(dy, std::vector<Element>(dy, s.zero()));
  for (std::size_t y = 0; y < dy; ++y) {
    for (std::size_t yp = 0; yp < dy; ++yp) {
      for (std::size_t x = 0; x < dx; ++x) {
        for (std::size_t xp = 0; xp < dx; ++xp) {
          out[y][yp] = s.add(out[y][yp], s.mul(f.matrix()(y * dy + yp, x * dx + xp),
                                               rho[x][xp]));
        }
      }
    }
  }
  return out;
}

TEST(QuantumTest, DoublingExamples) {
  EXPECT_TRUE(equal(double_pure(Matrix::identity(kC, 2)), identity(kC, QSystem::quantum(2))));
  const Superoperator ket0 = double_pure(lit(kC, {{"1"}, {"0"}}));
  EXPECT_EQ(ket0.matrix().to_string(), "[[1], [0], [0], [0]]");
  const Superoperator plus_i = double_pure(lit(kC, {{"1"}, {"i"}}));
  // |+i><+i| = [[1, -i], [i, 1]] vectorised row-major.
  EXPECT_EQ(plus_i.matrix().to_string(), "[[1], [-i], [i], [1]]");
}

TEST(QuantumTest, DoublingIsFunctorial) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const Matrix f = Matrix::random(kC, 2, 3, rng);
    const Matrix g = Matrix::random(kC, 2, 2, rng);
    const Matrix h = Matrix::random(kC, 3, 1, rng);
    EXPECT_TRUE(equal(double_pure(multiply(g, f)),
                      compose(double_pure(g), double_pure(f))));
    EXPECT_TRUE(catprob::equal(double_pure(kron(f, h)).matrix(),
                               tensor(double_pure(f), double_pure(h)).matrix()));
  }
}

TEST(QuantumTest, SuperoperatorTensorMatchesDensityMatrices) {
  // (f * g)(rho (x) sigma) = f(rho) (x) g(sigma) on product inputs.
  std::mt19937_64 rng(5);
  const Semiring q = Semiring::rat();
  const auto f = cpm_from_kraus(random_kraus(q, QSystem::quantum(2), QSystem::quantum(2), 2, rng));
  const auto g = cpm_from_kraus(random_kraus(q, QSystem::quantum(3), QSystem::quantum(2), 1, rng));
  const auto rho = oracle::dense(Matrix::random(q, 2, 2, rng));
  const auto sigma = oracle::dense(Matrix::random(q, 3, 3, rng));
  const auto lhs = apply_superop(tensor(f, g), oracle::kron(q, rho, sigma));
  const auto rhs = oracle::kron(q, apply_superop(f, rho), apply_superop(g, sigma));
  EXPECT_TRUE(oracle::same(q, lhs, rhs));
}

TEST(QuantumTest, DiscardIsTheTrace) {
  EXPECT_EQ(quantum_discard(kC, QSystem::quantum(2)).matrix().to_string(),
            "[[1, 0, 0, 1]]");
  std::mt19937_64 rng(7);
  const Matrix u = random_unitary(kC, 3, rng);
  EXPECT_TRUE(is_trace_preserving(double_pure(u)));
  const Superoperator effect = double_pure(lit(kC, {{"1", "0"}}));
  EXPECT_FALSE(is_trace_preserving(effect));
}

TEST(QuantumTest, DecoherenceExamples) {
  const QSystem qubit = QSystem::quantum(2);
  const Superoperator d = decoherence_superop(kC, qubit);
  const oracle::Dense rho = oracle::dense(lit(kC, {{"1/3", "1+i"}, {"2i", "2/3"}}));
  const auto out = apply_superop(d, rho);
  EXPECT_TRUE(oracle::same(kC, out, oracle::dense(lit(kC, {{"1/3", "0"}, {"0", "2/3"}}))));
  EXPECT_TRUE(equal(compose(d, d), d));
  EXPECT_TRUE(is_trace_preserving(d));
  const KrausFamily projectors{qubit, qubit,
                               {lit(kC, {{"1", "0"}, {"0", "0"}}),
                                lit(kC, {{"0", "0"}, {"0", "1"}})}};
  EXPECT_TRUE(equal(cpm_from_kraus(projectors), d));
  const matcat::Morphism id = classical_extract(d, Semiring::ratnn());
  EXPECT_TRUE(matcat::equal(id, matcat::identity(Semiring::ratnn(), qubit.basis())));
}

TEST(QuantumTest, RationalRotationMeasurementIsTracePreserving) {
  const QSystem qubit = QSystem::quantum(2);
  const KrausFamily k{qubit, qubit,
                      {lit(kC, {{"3/5", "4/5"}, {"0", "0"}}),
                       lit(kC, {{"0", "0"}, {"-4/5", "3/5"}})}};
  const Superoperator m = cpm_from_kraus(k);
  // Column sums of the trace rows: sum_e K^dag K = I.
  const auto tp = oracle::mul(kC, oracle::dense(quantum_discard(kC, qubit).matrix()),
                              oracle::dense(m.matrix()));
  EXPECT_TRUE(oracle::same(kC, tp, oracle::dense(quantum_discard(kC, qubit).matrix())));
  EXPECT_TRUE(is_trace_preserving(m));
}

TEST(QuantumTest, ClassicalWiresAreEnforced) {
  const QSystem bit = QSystem::classical(matcat::ClassicalObject::range(2));
  const Matrix hadamard_like = lit(kC, {{"3/5", "-4/5"}, {"4/5", "3/5"}});
  EXPECT_EQ(code_of([&] { double_pure(hadamard_like, bit, bit); }),
            ErrorCode::kNotDecohered);
  // From a Kraus family the classical wires are decohered instead.
  const Superoperator f = cpm_from_kraus(KrausFamily{bit, bit, {hadamard_like}});
  EXPECT_TRUE(is_decohered(f));
  const auto big_f = classical_extract(f, Semiring::ratnn());
  EXPECT_EQ(big_f.matrix().to_string(), "[[9/25, 16/25], [16/25, 9/25]]");
  // identity on a classical wire is the decoherence projector.
  EXPECT_TRUE(equal(identity(kC, bit),
                    reinterpret(decoherence_superop(kC, QSystem::quantum(2)), bit, bit)));
}

TEST(QuantumTest, InvarianceSurvivesComposeAndTensor) {
  std::mt19937_64 rng(11);
  const QSystem bit = QSystem::classical(matcat::ClassicalObject::range(2));
  const QSystem q = QSystem::quantum(2);
  const QSystem mixed = tensor(q, bit);
  for (int i = 0; i < 10; ++i) {
    const auto f = cpm_from_kraus(random_kraus(kC, mixed, bit, 2, rng));
    const auto g = cpm_from_kraus(random_kraus(kC, bit, mixed, 1, rng));
    EXPECT_NO_THROW(compose(g, f));
    EXPECT_NO_THROW(tensor(f, g));
    EXPECT_NO_THROW(compose(swap(kC, q, bit), g));
  }
}

TEST(QuantumTest, ExtractEmbedRoundTrip) {
  std::mt19937_64 rng(13);
  const Semiring r = Semiring::ratnn();
  for (int i = 0; i < 30; ++i) {
    const QSystem a = QSystem::quantum(1 + rng() % 3);
    const QSystem b = QSystem::quantum(1 + rng() % 3);
    const KrausFamily k = random_channel(kC, a, b, rng);
    const Superoperator phi = compose(decoherence_superop(kC, b),
                                      compose(cpm_from_kraus(k), decoherence_superop(kC, a)));
    const matcat::Morphism big_f = classical_extract(phi, r);
    EXPECT_TRUE(matcat::is_normalised(big_f));
    // <y| f(|x><x|) |y> on explicit density matrices.
    for (std::size_t x = 0; x < a.dim(); ++x) {
      oracle::Dense rho(a.dim(), std::vector<Element>(a.dim(), kC.zero()));
      rho[x][x] = kC.one();
      const auto out = apply_kraus(kC, k.elements, rho);
      for (std::size_t y = 0; y < b.dim(); ++y) {
        EXPECT_TRUE(kC.equal(*convert(big_f(y, x), r, kC), out[y][y]));
      }
    }
    const Superoperator back = classical_embed(big_f, kC);
    EXPECT_TRUE(catprob::equal(back.matrix(), phi.matrix()));
  }
}

TEST(QuantumTest, EmbedRespectsTensor) {
  std::mt19937_64 rng(17);
  const Semiring r = Semiring::ratnn();
  for (int i = 0; i < 10; ++i) {
    const matcat::Morphism f(matcat::ClassicalObject::range(2), matcat::ClassicalObject::range(3),
                             matcat::random_normalised_matrix(r, 3, 2, rng));
    const matcat::Morphism g(matcat::ClassicalObject::range(2), matcat::ClassicalObject::range(2),
                             matcat::random_normalised_matrix(r, 2, 2, rng));
    const auto lhs = classical_embed(matcat::tensor(f, g), kC);
    const auto rhs = tensor(classical_embed(f, kC), classical_embed(g, kC));
    EXPECT_TRUE(catprob::equal(lhs.matrix(), rhs.matrix()));
  }
  const matcat::Morphism stoch(matcat::ClassicalObject::range(2), matcat::ClassicalObject::range(2),
                               lit(r, {{"1/2", "1"}, {"1/2", "0"}}));
  EXPECT_TRUE(is_trace_preserving(classical_embed(stoch, kC)));
}

TEST(QuantumTest, ExtractRejectsCoherentProcesses) {
  EXPECT_EQ(code_of([] { classical_extract(identity(kC, QSystem::quantum(2)), Semiring::ratnn()); }),
            ErrorCode::kNotDecohered);
}

// Rank at most one iff every 2x2 minor vanishes.
bool all_minors_vanish(const Matrix& m) {
  const Semiring& s = m.semiring();
  for (std::size_t r1 = 0; r1 < m.rows(); ++r1) {
    for (std::size_t r2 = r1 + 1; r2 < m.rows(); ++r2) {
      for (std::size_t c1 = 0; c1 < m.cols(); ++c1) {
        for (std::size_t c2 = c1 + 1; c2 < m.cols(); ++c2) {
          const Element det = s.subtract(s.mul(m(r1, c1), m(r2, c2)),
                                         s.mul(m(r1, c2), m(r2, c1)));
          if (!s.is_zero(det)) return false;
        }
      }
    }
  }
  return true;
}

TEST(QuantumTest, ChoiRankPurity) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 10; ++i) {
    const Superoperator u = double_pure(random_unitary(kC, 2, rng));
    EXPECT_TRUE(is_pure_choi(u));
    EXPECT_TRUE(all_minors_vanish(choi(u)));
    const Superoperator v = double_pure(random_unitary(kC, 2, rng));
    const Element half = kC.parse("1/2");
    const Superoperator mix = sum(scale(half, u), scale(half, v));
    EXPECT_EQ(is_pure_choi(mix), all_minors_vanish(choi(mix)));
  }
  const Superoperator mix = sum(scale(kC.parse("1/2"), identity(kC, QSystem::quantum(2))),
                                scale(kC.parse("1/2"),
                                      double_pure(lit(kC, {{"0", "1"}, {"1", "0"}}))));
  EXPECT_FALSE(is_pure_choi(mix));
  EXPECT_FALSE(is_pure_choi(decoherence_superop(kC, QSystem::quantum(2))));
  EXPECT_EQ(code_of([] {
              is_pure_choi(identity(Semiring::boolean(), QSystem::quantum(2)));
            }),
            ErrorCode::kUnsupported);
}

TEST(QuantumTest, PurifyExamples) {
  const Semiring c = Semiring::complex_f64();
  std::mt19937_64 rng(23);
  const Matrix u = random_unitary(c, 2, rng);
  const KrausFamily k = purify(double_pure(u));
  ASSERT_EQ(k.env_dim(), 1u);
  // The Kraus element is u up to a global phase.
  EXPECT_TRUE(equal(double_pure(k.elements[0]), double_pure(u)));
  const KrausFamily d = purify(decoherence_superop(c, QSystem::quantum(2)));
  EXPECT_EQ(d.env_dim(), 2u);
  EXPECT_EQ(code_of([&] { purify(decoherence_superop(kC, QSystem::quantum(2))); }),
            ErrorCode::kUnsupportedMode);
  const Superoperator negative = scale(std::complex<double>(-1.0, 0.0), double_pure(u));
  EXPECT_EQ(code_of([&] { purify(negative); }), ErrorCode::kNotCp);
}

TEST(QuantumTest, PurifyRoundTrip) {
  const Semiring c = Semiring::complex_f64();
  std::mt19937_64 rng(29);
  for (int i = 0; i < 20; ++i) {
    const QSystem a = QSystem::quantum(1 + rng() % 3);
    const QSystem b = QSystem::quantum(1 + rng() % 3);
    const Superoperator phi = cpm_from_kraus(random_channel(c, a, b, rng));
    const KrausFamily k = purify(phi);
    // Contract the environment of the dilation by hand.
    const Matrix f = k.dilation();
    const std::size_t e = k.env_dim();
    double worst = 0.0;
    for (std::size_t y = 0; y < b.dim(); ++y) {
      for (std::size_t yp = 0; yp < b.dim(); ++yp) {
        for (std::size_t x = 0; x < a.dim(); ++x) {
          for (std::size_t xp = 0; xp < a.dim(); ++xp) {
            std::complex<double> acc = 0.0;
            for (std::size_t j = 0; j < e; ++j) {
              acc += std::get<std::complex<double>>(f(y * e + j, x)) *
                     std::conj(std::get<std::complex<double>>(f(yp * e + j, xp)));
            }
            const auto want = std::get<std::complex<double>>(
                phi.matrix()(y * b.dim() + yp, x * a.dim() + xp));
            worst = std::max(worst, std::abs(acc - want));
          }
        }
      }
    }
    EXPECT_LT(worst, 1e-9);
    EXPECT_TRUE(is_pure_choi(double_pure(f, a, tensor(b, QSystem::quantum(e)))));
  }
}

TEST(QuantumTest, RandomUnitariesAreUnitary) {
  std::mt19937_64 rng(31);
  for (const Semiring& s : {Semiring::boolean(), Semiring::rat(), Semiring::gauss_rat(),
                            Semiring::split_rat(), Semiring::gf2(2), Semiring::gf2(3)}) {
    for (std::size_t d = 1; d <= 3; ++d) {
      const Matrix u = random_unitary(s, d, rng);
      EXPECT_TRUE(catprob::equal(multiply(adjoint(u), u), Matrix::identity(s, d))) << s.id();
    }
  }
}

TEST(QuantumTest, RandomChannelsPreserveTrace) {
  std::mt19937_64 rng(37);
  for (const Semiring& s : {Semiring::rat(), Semiring::gauss_rat(), Semiring::split_rat(),
                            Semiring::boolean(), Semiring::gf2(3)}) {
    const auto k = random_channel(s, QSystem::quantum(2), QSystem::quantum(3), rng);
    EXPECT_TRUE(is_trace_preserving(cpm_from_kraus(k))) << s.id();
  }
}

TEST(ToyTheoryTest, ZooMatchesScalarSubsemirings) {
  for (const auto& row : toy_zoo()) {
    const QuantumBackend b = toy_theory(row.name);
    EXPECT_EQ(b.semiring().id(), row.s);
    if (b.semiring().exact()) {
      EXPECT_EQ(b.scalars(), scalar_subsemiring(b.semiring())) << row.name;
      EXPECT_EQ(b.scalars().id(), row.r);
    }
  }
  EXPECT_EQ(toy_theory("modal 3").scalars(), Semiring::gf(3));
  EXPECT_EQ(code_of([] { toy_theory("p-adic(5)"); }), ErrorCode::kOutOfScope);
  EXPECT_EQ(code_of([] { toy_theory("octonionic"); }), ErrorCode::kInvalidArgument);
}

TEST(ToyTheoryTest, HyperbolicNegativeWeight) {
  const QuantumBackend b = toy_theory("hyperbolic");
  const Superoperator psi = b.from_matrix(QSystem(), QSystem::quantum(2),
                                          hyperbolic_witness_state(), true);
  EXPECT_TRUE(b.is_normalised(psi));
  const Superoperator d = compose(decoherence_superop(b.semiring(), QSystem::quantum(2)), psi);
  const matcat::Morphism weights = b.extract(reinterpret(
      d, QSystem(), QSystem::classical(matcat::ClassicalObject::range(2))));
  EXPECT_EQ(weights.matrix().to_string(), "[[25/16], [-9/16]]");
}

TEST(ToyTheoryTest, PositiveTheoriesHaveNoNegativeWeights) {
  // Over bool and gauss-rat every diagonal weight x* x lies in a positive R.
  for (const char* name : {"relational", "quantum-exact"}) {
    const QuantumBackend b = toy_theory(name);
    EXPECT_TRUE(is_positive(b.scalars()).positive) << name;
  }
  EXPECT_FALSE(is_positive(toy_theory("hyperbolic").scalars()).positive);
}

TEST(ToyTheoryTest, SelfTestsPass) {
  for (const char* name : {"quantum-exact", "quantum-f64", "real", "hyperbolic",
                           "relational", "modal(2)", "modal(3)"}) {
    const SelfTestReport report = self_test(toy_theory(name), 6, 1);
    for (const auto& c : report.checks) {
      EXPECT_TRUE(c.passed()) << name << " " << c.name << ": " << c.witness;
    }
  }
}

TEST(ToyTheoryTest, ClassicalBackendsPassSelfTest) {
  for (const Semiring& s : {Semiring::boolean(), Semiring::nat(), Semiring::ratnn(),
                            Semiring::rat(), Semiring::gauss_rat(), Semiring::split_rat(),
                            Semiring::gf(3), Semiring::gf2(2)}) {
    const SelfTestReport report = self_test(ClassicalBackend(s), 10, 2);
    for (const auto& c : report.checks) {
      EXPECT_TRUE(c.passed()) << s.id() << " " << c.name << ": " << c.witness;
    }
  }
}

}  // namespace
}  // namespace catprob::quantum
