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

// Commutative involutive semirings with exact element arithmetic.
//
// A `Semiring` is a small value describing which algebra is in use; all
// arithmetic goes through it, so that a matrix can hold elements of any of
// the supported instances behind one `Element` type. Shipped instances:
//
//   bool        booleans (or, and), identity involution, positive
//   nat         naturals, identity involution, positive
//   ratnn       nonnegative rationals, identity involution, positive
//   rat         rationals, identity involution
//   gauss-rat   Gaussian rationals a+bi, complex conjugation
//   split-rat   split-complex rationals a+bj (j*j = +1), a+bj -> a-bj
//   gf <p>      prime field GF(p), identity involution
//   gf2 <p>     GF(p^2) = GF(p)[t]/(q(t)), Frobenius x -> x^p
//   complex-f64 double-precision complex numbers, approximate equality
//
// For gf2, q(t) = t^2 + t + 1 when irreducible over GF(p), otherwise the
// irreducible t^2 + c with the least c >= 1.

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace catprob {

using Integer = mpz_class;
using Rational = mpq_class;

// a + b*u where u*u = -1 (Gaussian) or u*u = +1 (split-complex).
struct QuadRational {
  Rational re;
  Rational im;

  friend bool operator==(const QuadRational& a, const QuadRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

struct Residue {
  std::uint64_t value = 0;

  friend bool operator==(Residue a, Residue b) { return a.value == b.value; }
};

// a + b*t in GF(p^2).
struct ResiduePair {
  std::uint64_t a = 0;
  std::uint64_t b = 0;

  friend bool operator==(ResiduePair x, ResiduePair y) {
    return x.a == y.a && x.b == y.b;
  }
};

using Element = std::variant<bool, Integer, Rational, QuadRational, Residue,
                             ResiduePair, std::complex<double>>;

enum class SemiringKind {
  kBool,
  kNat,
  kRatNonNeg,
  kRat,
  kGaussRat,
  kSplitRat,
  kGF,
  kGF2,
  kComplexF64,
};

class Semiring {
 public:
  using value_type = Element;

  static constexpr double kDefaultTolerance = 1e-9;

  static Semiring boolean();
  static Semiring nat();
  static Semiring ratnn();
  static Semiring rat();
  static Semiring gauss_rat();
  static Semiring split_rat();
  static Semiring gf(std::uint64_t p);
  static Semiring gf2(std::uint64_t p);
  static Semiring complex_f64(double tolerance = kDefaultTolerance);

  // Accepts the textual ids listed above; `gf 3` and `gf2 5` take the prime
  // as a second whitespace-separated token (`gf(3)` and `gf3` also parse);
  // `complex-f64 1e-9` sets the tolerance.
  static Semiring from_id(std::string_view id);

  SemiringKind kind() const { return kind_; }
  std::string id() const;
  bool exact() const { return kind_ != SemiringKind::kComplexF64; }
  double tolerance() const { return tolerance_; }
  std::uint64_t characteristic() const { return p_; }
  bool declared_positive() const;
  bool has_additive_inverses() const;
  bool is_field() const;
  bool is_finite() const;

  // Coefficients of the defining polynomial t^2 + alpha*t + c0 (gf2 only).
  std::uint64_t quad_alpha() const { return alpha_; }
  std::uint64_t quad_c0() const { return c0_; }

  Element zero() const;
  Element one() const;
  Element from_int(long long n) const;

  Element add(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element conj(const Element& a) const;
  // Throws kUnsupported when the semiring has no additive inverses.
  Element negate(const Element& a) const;
  Element subtract(const Element& a, const Element& b) const;

  bool equal(const Element& a, const Element& b) const;
  bool is_zero(const Element& a) const { return equal(a, zero()); }
  bool is_invertible(const Element& a) const;
  // Throws kConditioningUndefined when `a` has no multiplicative inverse.
  Element inverse(const Element& a) const;

  bool contains(const Element& a) const;
  Element normalize(const Element& a) const;

  Element parse(std::string_view literal) const;
  std::string format(const Element& a) const;

  Element sample(std::mt19937_64& rng) const;
  // A fixed finite subset used for brute-force searches.
  std::vector<Element> sample_set() const;
  // Every element, for finite semirings of modest size.
  std::optional<std::vector<Element>> enumerate() const;

  // Numeric view of an element (exact kinds are rounded to double).
  std::complex<double> to_complex(const Element& a) const;

  friend bool operator==(const Semiring& a, const Semiring& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_ && a.tolerance_ == b.tolerance_;
  }

 private:
  Semiring(SemiringKind kind, std::uint64_t p, double tolerance);

  std::uint64_t mod_add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mod_neg(std::uint64_t a) const;
  std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e) const;
  ResiduePair quad_mul(ResiduePair x, ResiduePair y) const;
  ResiduePair quad_pow(ResiduePair x, std::uint64_t e) const;

  SemiringKind kind_;
  std::uint64_t p_ = 0;
  std::uint64_t alpha_ = 0;
  std::uint64_t c0_ = 0;
  double tolerance_ = 0.0;
};

// Maps an element of `from` into `to` when both share a representation
// (e.g. ratnn -> gauss-rat, gf p -> gf2 p, gauss-rat with zero imaginary
// part -> ratnn). Returns nullopt when `x` is not an element of `to`.
std::optional<Element> convert(const Element& x, const Semiring& from,
                               const Semiring& to);

struct PositivityReport {
  bool positive = false;
  // A family summing to zero with some nonzero member, when not positive.
  std::vector<Element> witness;
};

// Declared positivity plus a stored witness for the non-positive instances.
// Approximate mode is rejected with kUnsupportedMode.
PositivityReport is_positive(const Semiring& s);

// The sub-semiring generated under addition by {x* x}. Realised as a lookup
// for bool, rat, gauss-rat, split-rat and gf2 p; each lookup is re-checked by
// enumeration (finite) or sampling (infinite) before it is returned.
Semiring scalar_subsemiring(const Semiring& s);

bool is_prime(std::uint64_t n);

}  // namespace catprob
