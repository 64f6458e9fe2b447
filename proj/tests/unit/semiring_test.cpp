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

#include "catprob/semiring.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "catprob/error.hpp"
#include "catprob/semiring_laws.hpp"

namespace catprob {
namespace {

std::vector<Semiring> exact_instances() {
  return {Semiring::boolean(), Semiring::nat(),       Semiring::ratnn(),
          Semiring::rat(),     Semiring::gauss_rat(), Semiring::split_rat(),
          Semiring::gf(2),     Semiring::gf(3),       Semiring::gf(7),
          Semiring::gf2(2),    Semiring::gf2(3),      Semiring::gf2(5)};
}

TEST(SemiringTest, IdsRoundTrip) {
  for (const Semiring& s : exact_instances()) {
    EXPECT_EQ(Semiring::from_id(s.id()), s) << s.id();
  }
  EXPECT_EQ(Semiring::from_id("complex-f64").id(), "complex-f64");
  EXPECT_EQ(Semiring::from_id("gf(3)"), Semiring::gf(3));
  EXPECT_THROW(Semiring::from_id("gf 4"), Error);
  EXPECT_THROW(Semiring::from_id("padic 3"), Error);
}

TEST(SemiringTest, LawsHoldOnSampledTriples) {
  for (const Semiring& s : exact_instances()) {
    const AxiomReport report = axioms_check(s, 500, 11);
    EXPECT_TRUE(report.ok()) << s.id() << ": " << report.violations[0].law;
    EXPECT_EQ(report.samples, 500);
  }
}

TEST(SemiringTest, ApproximateLawsWithinTolerance) {
  const AxiomReport report = axioms_check(Semiring::complex_f64(), 200, 3);
  EXPECT_TRUE(report.ok());
}

// Multiplication that forgets the second summand, so a(b+c) != ab+ac.
struct BrokenRing {
  using value_type = long;
  long zero() const { return 0; }
  long one() const { return 1; }
  long add(long a, long b) const { return a + b; }
  long mul(long a, long b) const { return a * b + 1 - (a == 0 || b == 0); }
  long conj(long a) const { return a; }
  bool equal(long a, long b) const { return a == b; }
  long sample(std::mt19937_64& rng) const { return static_cast<long>(rng() % 7); }
  std::string format(long a) const { return std::to_string(a); }
};

TEST(SemiringTest, BrokenDistributivityIsReported) {
  const AxiomReport report = axioms_check(BrokenRing{}, 100, 1);
  ASSERT_FALSE(report.ok());
  bool saw = false;
  for (const auto& v : report.violations) saw |= v.law == "distributive";
  EXPECT_TRUE(saw);
}

TEST(SemiringTest, BudgetMustBePositive) {
  EXPECT_THROW(axioms_check(Semiring::rat(), 0), Error);
}

TEST(SemiringTest, LiteralsParseAndFormat) {
  const Semiring q = Semiring::rat();
  EXPECT_EQ(q.format(q.parse("6/8")), "3/4");
  EXPECT_EQ(q.format(q.parse("-0.25")), "-1/4");
  EXPECT_EQ(q.format(q.parse("010/4")), "5/2");
  EXPECT_THROW(q.parse("2/-4"), Error);
  const Semiring c = Semiring::gauss_rat();
  EXPECT_EQ(c.format(c.parse("1/2+3/4i")), "1/2+3/4i");
  EXPECT_EQ(c.format(c.parse("-i")), "-i");
  EXPECT_EQ(c.format(c.mul(c.parse("i"), c.parse("i"))), "-1");
  const Semiring h = Semiring::split_rat();
  EXPECT_EQ(h.format(h.mul(h.parse("j"), h.parse("j"))), "1");
  EXPECT_EQ(h.format(h.parse("5/4+3/4j")), "5/4+3/4j");
  EXPECT_THROW(Semiring::ratnn().parse("-1"), Error);
  EXPECT_THROW(Semiring::nat().parse("1/2"), Error);
  EXPECT_EQ(Semiring::nat().format(Semiring::nat().parse("017")), "17");
  EXPECT_THROW(Semiring::gf(5).parse("x"), Error);
  EXPECT_EQ(Semiring::gf(5).format(Semiring::gf(5).parse("7")), "2");
}

TEST(SemiringTest, FormatParseRoundTripOnSamples) {
  for (const Semiring& s : exact_instances()) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
      const Element x = s.sample(rng);
      EXPECT_TRUE(s.equal(s.parse(s.format(x)), x)) << s.id() << " " << s.format(x);
    }
  }
}

TEST(SemiringTest, CanonicalFormMakesEqualityStructural) {
  const Semiring q = Semiring::rat();
  const Element a = q.parse("2/6");
  const Element b = q.parse("1/3");
  EXPECT_EQ(q.normalize(a), q.normalize(b));
  EXPECT_TRUE(a == b);
  EXPECT_FALSE(q.normalize(a) == q.normalize(q.parse("1/4")));
}

TEST(SemiringTest, InvolutionsActAsDeclared) {
  const Semiring c = Semiring::gauss_rat();
  EXPECT_EQ(c.format(c.conj(c.parse("1+2i"))), "1-2i");
  const Semiring h = Semiring::split_rat();
  EXPECT_EQ(h.format(h.conj(h.parse("1+2j"))), "1-2j");
  const Semiring q = Semiring::rat();
  EXPECT_EQ(q.format(q.conj(q.parse("-3"))), "-3");
}

// GF(p^2) reference arithmetic on pairs, with the modulus polynomial given
// explicitly: t^2 = -alpha t - c0.
struct QuadOracle {
  long p, alpha, c0;
  std::pair<long, long> mul(std::pair<long, long> x, std::pair<long, long> y) const {
    long a = x.first * y.first;
    long b = x.first * y.second + x.second * y.first;
    long tt = x.second * y.second;
    a -= tt * c0;
    b -= tt * alpha;
    return {((a % p) + p) % p, ((b % p) + p) % p};
  }
};

TEST(SemiringTest, Gf2ModulusChoice) {
  // x^2+x+1 is irreducible over GF(2) and GF(5) but not over GF(3) or GF(7).
  EXPECT_EQ(Semiring::gf2(2).quad_alpha(), 1u);
  EXPECT_EQ(Semiring::gf2(2).quad_c0(), 1u);
  EXPECT_EQ(Semiring::gf2(5).quad_alpha(), 1u);
  EXPECT_EQ(Semiring::gf2(3).quad_alpha(), 0u);
  EXPECT_EQ(Semiring::gf2(3).quad_c0(), 1u);  // t^2 + 1
  EXPECT_EQ(Semiring::gf2(7).quad_alpha(), 0u);
  EXPECT_EQ(Semiring::gf2(7).quad_c0(), 1u);  // -1 is a non-residue mod 7
}

TEST(SemiringTest, Gf2MultiplicationMatchesPolynomialOracle) {
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    const Semiring s = Semiring::gf2(p);
    const QuadOracle o{static_cast<long>(p), static_cast<long>(s.quad_alpha()),
                       static_cast<long>(s.quad_c0())};
    const auto all = s.enumerate();
    ASSERT_TRUE(all.has_value());
    ASSERT_EQ(all->size(), p * p);
    for (const Element& x : *all) {
      for (const Element& y : *all) {
        const auto [xa, xb] = std::get<ResiduePair>(x);
        const auto [ya, yb] = std::get<ResiduePair>(y);
        const auto want = o.mul({long(xa), long(xb)}, {long(ya), long(yb)});
        const auto got = std::get<ResiduePair>(s.mul(x, y));
        EXPECT_EQ(long(got.a), want.first);
        EXPECT_EQ(long(got.b), want.second);
      }
    }
  }
}

TEST(SemiringTest, FrobeniusIsAnInvolutiveAutomorphism) {
  const Semiring s = Semiring::gf2(3);
  const auto elements = s.enumerate();
  ASSERT_TRUE(elements);
  for (const Element& x : *elements) {
    Element xp = s.one();
    for (int i = 0; i < 3; ++i) xp = s.mul(xp, x);
    EXPECT_TRUE(s.equal(s.conj(x), xp)) << s.format(x);
    EXPECT_TRUE(s.equal(s.conj(s.conj(x)), x));
  }
}

TEST(SemiringTest, InvertibilityPerSemiring) {
  const Semiring b = Semiring::boolean();
  EXPECT_TRUE(b.is_invertible(b.one()));
  EXPECT_FALSE(b.is_invertible(b.zero()));
  const Semiring n = Semiring::nat();
  EXPECT_TRUE(n.is_invertible(n.one()));
  EXPECT_FALSE(n.is_invertible(n.from_int(2)));
  const Semiring q = Semiring::ratnn();
  EXPECT_EQ(q.format(q.inverse(q.parse("3/7"))), "7/3");
  EXPECT_THROW(q.inverse(q.zero()), Error);
  const Semiring h = Semiring::split_rat();
  EXPECT_FALSE(h.is_invertible(h.parse("1+j")));  // (1+j)(1-j) = 0
  const Element x = h.parse("2+j");
  EXPECT_TRUE(h.equal(h.mul(x, h.inverse(x)), h.one()));
  const Semiring f = Semiring::gf2(5);
  const auto elements = f.enumerate();
  ASSERT_TRUE(elements);
  for (const Element& y : *elements) {
    if (f.is_zero(y)) continue;
    EXPECT_TRUE(f.equal(f.mul(y, f.inverse(y)), f.one()));
  }
}

// Brute-force search for a family of at most three sample elements that sums
// to zero with a nonzero member.
bool has_degenerate_family(const Semiring& s) {
  const std::vector<Element> set = s.sample_set();
  for (const Element& a : set) {
    if (s.is_zero(a)) continue;
    for (const Element& b : set) {
      if (s.is_zero(s.add(a, b))) return true;
      for (const Element& c : set) {
        if (s.is_zero(s.add(s.add(a, b), c))) return true;
      }
    }
  }
  return false;
}

TEST(SemiringTest, PositivityAgreesWithBruteForce) {
  for (const Semiring& s : exact_instances()) {
    const PositivityReport r = is_positive(s);
    EXPECT_EQ(r.positive, !has_degenerate_family(s)) << s.id();
    if (!r.positive) {
      ASSERT_FALSE(r.witness.empty());
      Element total = s.zero();
      bool nonzero = false;
      for (const Element& w : r.witness) {
        total = s.add(total, w);
        nonzero |= !s.is_zero(w);
      }
      EXPECT_TRUE(s.is_zero(total));
      EXPECT_TRUE(nonzero);
    }
  }
}

TEST(SemiringTest, PositivityWitnesses) {
  const Semiring q = Semiring::rat();
  const auto r = is_positive(q);
  ASSERT_EQ(r.witness.size(), 2u);
  EXPECT_EQ(q.format(r.witness[0]), "1");
  EXPECT_EQ(q.format(r.witness[1]), "-1");
  const Semiring f = Semiring::gf(2);
  const auto g = is_positive(f);
  EXPECT_EQ(f.format(g.witness[1]), "1");
  EXPECT_TRUE(is_positive(Semiring::ratnn()).positive);
  EXPECT_TRUE(is_positive(Semiring::nat()).positive);
  EXPECT_TRUE(is_positive(Semiring::boolean()).positive);
  EXPECT_THROW(is_positive(Semiring::complex_f64()), Error);
}

TEST(SemiringTest, ScalarSubsemiringTable) {
  EXPECT_EQ(scalar_subsemiring(Semiring::gauss_rat()), Semiring::ratnn());
  EXPECT_EQ(scalar_subsemiring(Semiring::boolean()), Semiring::boolean());
  EXPECT_EQ(scalar_subsemiring(Semiring::rat()), Semiring::ratnn());
  EXPECT_EQ(scalar_subsemiring(Semiring::split_rat()), Semiring::rat());
  EXPECT_EQ(scalar_subsemiring(Semiring::gf2(2)), Semiring::gf(2));
  try {
    scalar_subsemiring(Semiring::nat());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotInTable);
  }
  try {
    scalar_subsemiring(Semiring::complex_f64());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedMode);
  }
}

TEST(SemiringTest, NormsInGf4AreUnits) {
  // x* x = x^3 = 1 for every nonzero x in GF(4).
  const Semiring s = Semiring::gf2(2);
  const auto elements = s.enumerate();
  ASSERT_TRUE(elements);
  for (const Element& x : *elements) {
    const Element n = s.mul(s.conj(x), x);
    EXPECT_TRUE(s.equal(n, s.is_zero(x) ? s.zero() : s.one()));
  }
}

TEST(SemiringTest, ConvertBetweenRepresentations) {
  const auto up = convert(Semiring::ratnn().parse("2/3"), Semiring::ratnn(),
                          Semiring::gauss_rat());
  ASSERT_TRUE(up);
  EXPECT_EQ(Semiring::gauss_rat().format(*up), "2/3");
  EXPECT_FALSE(convert(Semiring::gauss_rat().parse("i"), Semiring::gauss_rat(),
                       Semiring::ratnn()));
  EXPECT_FALSE(convert(Semiring::rat().parse("-1"), Semiring::rat(),
                       Semiring::ratnn()));
}

TEST(SemiringTest, ApproximateEqualityUsesTolerance) {
  const Semiring c = Semiring::complex_f64(1e-6);
  EXPECT_TRUE(c.equal(std::complex<double>(1.0, 0.0),
                      std::complex<double>(1.0 + 5e-7, -5e-7)));
  EXPECT_FALSE(c.equal(std::complex<double>(1.0, 0.0),
                       std::complex<double>(1.0 + 2e-6, 0.0)));
}

}  // namespace
TEST(SemiringTest, ComplexIdCarriesTolerance) {
  const Semiring c = Semiring::from_id("complex-f64 1e-3");
  EXPECT_DOUBLE_EQ(c.tolerance(), 1e-3);
  EXPECT_EQ(c.id(), "complex-f64");
  EXPECT_THROW(Semiring::from_id("complex-f64 -1"), Error);
  EXPECT_THROW(Semiring::from_id("complex-f64 tiny"), Error);
}

}  // namespace catprob
