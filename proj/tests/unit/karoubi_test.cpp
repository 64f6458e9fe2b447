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

#include "catprob/karoubi.hpp"

#include <gtest/gtest.h>

#include <random>

#include "catprob/quantum.hpp"
#include "catprob/toy_theory.hpp"

namespace catprob::karoubi {
namespace {

using matcat::ClassicalObject;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidArgument;
}

class ClassicalKaroubiTest : public ::testing::Test {
 protected:
  Semiring q = Semiring::rat();
  ClassicalBackend b{q};
};

TEST_F(ClassicalKaroubiTest, MakeObject) {
  const auto x = ClassicalObject({"a", "b"});
  EXPECT_NO_THROW(make_object(b, x, b.identity(x)));
  const auto copy_discard = matcat::compose(
      matcat::tensor(matcat::identity(q, x), matcat::discard(q, x)), matcat::copy(q, x));
  EXPECT_NO_THROW(make_object(b, x, copy_discard));
  EXPECT_EQ(code_of([&] { make_object(b, x, b.scale(q.from_int(2), b.identity(x))); }),
            ErrorCode::kNotIdempotent);
  // Idempotent but not normalised.
  const auto proj = matcat::compose(matcat::point(q, x, "a"), matcat::copoint(q, x, "a"));
  EXPECT_EQ(code_of([&] { make_object(b, x, proj); }), ErrorCode::kNotNormalised);
}

TEST_F(ClassicalKaroubiTest, HomsAbsorbIdempotents) {
  std::mt19937_64 rng(3);
  const auto x = ClassicalObject::range(3);
  const auto [p, m] = b.random_spo(ClassicalObject::range(2), x, rng);
  const KaroubiObject<ClassicalBackend> a = make_object(b, x, b.compose(p, m));
  EXPECT_TRUE(is_hom(b, a.idem, a, a));
  int generic_false = 0;
  for (int i = 0; i < 20; ++i) {
    const auto f = b.random_arrow(x, x, rng, false);
    EXPECT_TRUE(is_hom(b, b.compose(a.idem, b.compose(f, a.idem)), a, a));
    generic_false += !is_hom(b, f, a, a);
  }
  EXPECT_GE(generic_false, 18);
}

TEST_F(ClassicalKaroubiTest, LinearCombinationsStayInvariant) {
  std::mt19937_64 rng(5);
  const auto h = ClassicalObject::range(3);
  for (int i = 0; i < 20; ++i) {
    const auto [p, m] = b.random_spo(ClassicalObject::range(1 + rng() % 3), h, rng);
    const auto a = make_object(b, h, b.compose(p, m));
    auto invariant = [&] {
      return b.compose(a.idem, b.compose(b.random_arrow(h, h, rng, false), a.idem));
    };
    const auto f = invariant(), g = invariant();
    EXPECT_TRUE(is_hom(b, b.sum(f, g), a, a));
    EXPECT_TRUE(is_hom(b, b.scale(q.sample(rng), f), a, a));
    // The discarding map is invariant: discard . h = discard.
    const auto unit = make_object(b, b.unit(), b.identity(b.unit()));
    EXPECT_TRUE(is_hom(b, b.discard(h), a, unit));
  }
}

TEST_F(ClassicalKaroubiTest, TensorOfObjectsValidates) {
  std::mt19937_64 rng(6);
  const auto [p, m] = b.random_spo(ClassicalObject::range(2), ClassicalObject::range(3), rng);
  const auto a = make_object(b, ClassicalObject::range(3), b.compose(p, m));
  const auto c = make_object(b, ClassicalObject::range(2), b.identity(ClassicalObject::range(2)));
  const auto ac = tensor(b, a, c);
  EXPECT_TRUE(b.equal(ac.idem, b.tensor(a.idem, c.idem)));
}

TEST_F(ClassicalKaroubiTest, PartialInverseIsSharpButNotNormalised) {
  const auto two = ClassicalObject::range(2);
  const auto three = ClassicalObject::range(3);
  const SpoPair<ClassicalBackend> pair{
      two, matcat::deterministic_embed(q, two, three, {{"0", "0"}, {"1", "1"}}),
      matcat::deterministic_embed(q, three, two, {{"0", "0"}, {"1", "1"}})};
  const SpoReport r = spo_validate(b, pair);
  EXPECT_TRUE(r.sharp);
  EXPECT_TRUE(r.prep_normalised);
  EXPECT_FALSE(r.obs_normalised);
  EXPECT_EQ(code_of([&] { decoherence_map(b, pair); }), ErrorCode::kNotNormalised);

  // Completing m by 2 -> 0 gives a rank-2 idempotent stochastic matrix.
  const SpoPair<ClassicalBackend> done{
      two, pair.prep,
      matcat::deterministic_embed(q, three, two, {{"0", "0"}, {"1", "1"}, {"2", "0"}})};
  const auto d = decoherence_map(b, done);
  EXPECT_EQ(d.matrix().to_string(), "[[1, 0, 1], [0, 1, 0], [0, 0, 0]]");
  EXPECT_TRUE(b.equal(b.compose(d, d), d));
  EXPECT_TRUE(b.is_normalised(d));
}

TEST_F(ClassicalKaroubiTest, SharpnessFailureIsReported) {
  const auto two = ClassicalObject::range(2);
  const SpoPair<ClassicalBackend> swapped{
      two, b.identity(two), matcat::deterministic_embed(q, two, two, {{"0", "1"}, {"1", "0"}})};
  EXPECT_EQ(code_of([&] { spo_validate(b, swapped); }), ErrorCode::kInvalidSpo);
  const SpoPair<ClassicalBackend> trivial{two, b.identity(two), b.identity(two)};
  EXPECT_TRUE(b.equal(decoherence_map(b, trivial), b.identity(two)));
}

TEST_F(ClassicalKaroubiTest, ClassicaliseDeclassicaliseRoundTrips) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    const auto h = ClassicalObject::range(1 + rng() % 4);
    const auto g = ClassicalObject::range(1 + rng() % 4);
    const auto x = ClassicalObject::range(1 + rng() % h.size());
    const auto y = ClassicalObject::range(1 + rng() % g.size());
    const auto [p, m] = b.random_spo(x, h, rng);
    const auto [qq, n] = b.random_spo(y, g, rng);
    const SpoPair<ClassicalBackend> src{x, p, m}, dst{y, qq, n};
    const auto f = b.compose(b.compose(qq, n),
                             b.compose(b.random_arrow(h, g, rng, false), b.compose(p, m)));
    EXPECT_TRUE(b.equal(declassicalise(b, classicalise(b, f, src, dst), src, dst), f));
    const auto big_f = b.random_arrow(x, y, rng, false);
    EXPECT_TRUE(b.equal(classicalise(b, declassicalise(b, big_f, src, dst), src, dst), big_f));
  }
}

TEST_F(ClassicalKaroubiTest, ClassicaliseExamples) {
  std::mt19937_64 rng(9);
  const auto h = ClassicalObject::range(3);
  const auto x = ClassicalObject::range(2);
  const auto [p, m] = b.random_spo(x, h, rng);
  const SpoPair<ClassicalBackend> pair{x, p, m};
  const auto d = decoherence_map(b, pair);
  EXPECT_TRUE(b.equal(classicalise(b, d, pair, pair), b.identity(x)));
  EXPECT_TRUE(b.equal(classicalise(b, b.zero(h, h), pair, pair), b.zero(x, x)));
  EXPECT_TRUE(b.equal(declassicalise(b, b.identity(x), pair, pair), d));
  EXPECT_TRUE(b.equal(declassicalise(b, b.zero(x, x), pair, pair), b.zero(h, h)));
  int rejected = 0;
  for (int i = 0; i < 10; ++i) {
    try {
      classicalise(b, b.random_arrow(h, h, rng, false), pair, pair);
    } catch (const Error& e) {
      rejected += e.code() == ErrorCode::kNotAHom;
    }
  }
  EXPECT_GE(rejected, 9);
  EXPECT_EQ(code_of([&] { declassicalise(b, b.identity(h), pair, pair); }),
            ErrorCode::kShapeMismatch);
}

TEST(QuantumKaroubiTest, StandardBasisPairGivesDecoherence) {
  const quantum::QuantumBackend b = quantum::toy_theory("quantum-exact");
  const Semiring& s = b.semiring();
  const auto x = ClassicalObject::range(2);
  const quantum::QSystem h = quantum::QSystem::quantum(2);
  const quantum::QSystem xs = b.classical(x);
  const auto prep = quantum::reinterpret(quantum::decoherence_superop(s, h), xs, h);
  const auto obs = quantum::reinterpret(quantum::decoherence_superop(s, h), h, xs);
  const SpoPair<quantum::QuantumBackend> pair{x, prep, obs};
  const SpoReport r = spo_validate(b, pair);
  EXPECT_TRUE(r.normalised());
  EXPECT_TRUE(b.equal(decoherence_map(b, pair), quantum::decoherence_superop(s, h)));
}

TEST(QuantumKaroubiTest, ClassicaliseDeclassicaliseRoundTrips) {
  std::mt19937_64 rng(11);
  for (const char* name : {"quantum-exact", "real", "relational"}) {
    const quantum::QuantumBackend b = quantum::toy_theory(name);
    for (int i = 0; i < 8; ++i) {
      const auto h = quantum::QSystem::quantum(1 + rng() % 3);
      const auto g = quantum::QSystem::quantum(1 + rng() % 3);
      const auto x = ClassicalObject::range(1 + rng() % h.dim());
      const auto y = ClassicalObject::range(1 + rng() % g.dim());
      const auto [p, m] = b.random_spo(x, h, rng);
      const auto [qq, n] = b.random_spo(y, g, rng);
      const SpoPair<quantum::QuantumBackend> src{x, p, m}, dst{y, qq, n};
      ASSERT_TRUE(spo_validate(b, src).normalised()) << name;
      const auto f = b.compose(b.compose(qq, n),
                               b.compose(b.random_arrow(h, g, rng, false), b.compose(p, m)));
      EXPECT_TRUE(b.equal(declassicalise(b, classicalise(b, f, src, dst), src, dst), f)) << name;
      const matcat::Morphism big_f(
          x, y, matcat::random_normalised_matrix(b.scalars(), y.size(), x.size(), rng));
      EXPECT_TRUE(matcat::equal(classicalise(b, declassicalise(b, big_f, src, dst), src, dst),
                                big_f))
          << name;
    }
  }
}

}  // namespace
}  // namespace catprob::karoubi
