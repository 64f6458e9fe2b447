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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>

#include "catprob/error.hpp"

namespace catprob {

namespace {

constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31);

std::string strip_spaces(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

[[noreturn]] void bad_literal(std::string_view text, std::string_view why) {
  fail(ErrorCode::kInvalidLiteral,
       "'" + std::string(text) + "': " + std::string(why));
}

// One signed summand of a literal such as "3/5", "-4/5i" or "t".
struct Term {
  bool negative = false;
  std::string coeff;  // empty when the term is a bare unit
  bool has_unit = false;
};

// Splits "a+bu" style literals into terms. `unit` is 0 for plain numbers.
std::vector<Term> split_terms(std::string_view raw, char unit) {
  const std::string s = strip_spaces(raw);
  if (s.empty()) bad_literal(raw, "empty literal");
  std::vector<Term> terms;
  std::size_t i = 0;
  while (i < s.size()) {
    Term term;
    if (s[i] == '+' || s[i] == '-') {
      term.negative = s[i] == '-';
      ++i;
    } else if (!terms.empty()) {
      bad_literal(raw, "expected '+' or '-' between terms");
    }
    const std::size_t start = i;
    while (i < s.size()) {
      const char c = s[i];
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
          c == '.') {
        ++i;
      } else if ((c == 'e' || c == 'E') && i > start) {
        ++i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
      } else {
        break;
      }
    }
    term.coeff = s.substr(start, i - start);
    if (unit != 0 && i < s.size() && s[i] == unit) {
      term.has_unit = true;
      ++i;
    }
    if (term.coeff.empty() && !term.has_unit) {
      bad_literal(raw, "unexpected character");
    }
    terms.push_back(term);
  }
  return terms;
}

Rational parse_rational_coeff(std::string_view text, std::string_view whole) {
  if (text.empty()) return Rational(1);
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      bad_literal(whole, "malformed fraction");
    }
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) bad_literal(whole, "zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
  }
  if (text.find_first_of(".eE") != std::string_view::npos) {
    // Exact decimal: mantissa digits scaled by a power of ten.
    std::string mantissa;
    long exponent = 0;
    std::size_t i = 0;
    bool seen_point = false;
    for (; i < text.size(); ++i) {
      const char c = text[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        mantissa.push_back(c);
        if (seen_point) --exponent;
      } else if (c == '.' && !seen_point) {
        seen_point = true;
      } else {
        break;
      }
    }
    if (i < text.size()) {
      if (text[i] != 'e' && text[i] != 'E') bad_literal(whole, "bad decimal");
      const std::string exp_text(text.substr(i + 1));
      const std::string_view digits =
          (!exp_text.empty() && (exp_text[0] == '-' || exp_text[0] == '+'))
              ? std::string_view(exp_text).substr(1)
              : std::string_view(exp_text);
      if (!all_digits(digits)) bad_literal(whole, "bad exponent");
      exponent += std::stol(exp_text);
    }
    if (mantissa.empty()) bad_literal(whole, "bad decimal");
    Integer m(mantissa, 10);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10,
                  static_cast<unsigned long>(exponent < 0 ? -exponent
                                                          : exponent));
    Rational q = exponent < 0 ? Rational(m, scale) : Rational(m * scale, 1);
    q.canonicalize();
    return q;
  }
  if (!all_digits(text)) bad_literal(whole, "malformed number");
  return Rational(Integer(std::string(text), 10), 1);
}

double parse_double_coeff(std::string_view text, std::string_view whole) {
  if (text.empty()) return 1.0;
  if (text.find('/') != std::string_view::npos) {
    return parse_rational_coeff(text, whole).get_d();
  }
  const std::string buf(text);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size()) bad_literal(whole, "malformed number");
  return v;
}

// Parses "a", "bu", "a+bu", "a-bu" (either order) into exact parts.
std::pair<Rational, Rational> parse_quad_rational(std::string_view text,
                                                  char unit) {
  Rational re(0), im(0);
  bool seen_re = false, seen_im = false;
  for (const Term& t : split_terms(text, unit)) {
    Rational v = parse_rational_coeff(t.coeff, text);
    if (t.negative) v = -v;
    if (t.has_unit) {
      if (seen_im) bad_literal(text, "repeated imaginary part");
      im = v;
      seen_im = true;
    } else {
      if (seen_re) bad_literal(text, "repeated real part");
      re = v;
      seen_re = true;
    }
  }
  return {re, im};
}

std::string format_quad(const std::string& re, bool re_zero,
                        const std::string& im_abs, bool im_zero,
                        bool im_negative, bool im_unit_magnitude, char unit) {
  if (im_zero) return re_zero ? std::string("0") : re;
  std::string im_part = im_unit_magnitude ? std::string(1, unit)
                                          : im_abs + std::string(1, unit);
  if (re_zero) return (im_negative ? "-" : "") + im_part;
  return re + (im_negative ? "-" : "+") + im_part;
}

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // drop negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Rational random_rational(std::mt19937_64& rng, bool allow_negative) {
  std::uniform_int_distribution<int> num(allow_negative ? -6 : 0, 6);
  std::uniform_int_distribution<int> den(1, 4);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

template <typename T>
const T& as(const Element& e, std::string_view what) {
  const T* v = std::get_if<T>(&e);
  if (v == nullptr) {
    fail(ErrorCode::kSemiringMismatch,
         "element is not a valid " + std::string(what) + " value");
  }
  return *v;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Semiring::Semiring(SemiringKind kind, std::uint64_t p, double tolerance)
    : kind_(kind), p_(p), tolerance_(tolerance) {
  if (kind == SemiringKind::kGF || kind == SemiringKind::kGF2) {
    if (!is_prime(p) || p >= kMaxPrime) {
      fail(ErrorCode::kInvalidArgument,
           "characteristic must be a prime below 2^31, got " +
               std::to_string(p));
    }
  }
  if (kind == SemiringKind::kGF2) {
    // t^2 + t + 1 is irreducible iff it has no root: p == 2, or p > 3 with
    // -3 a non-residue. Otherwise take t^2 + c with -c a non-residue.
    auto non_residue = [&](std::uint64_t a) {
      return mod_pow(a % p, (p - 1) / 2) == p - 1;
    };
    if (p == 2 || (p > 3 && non_residue(p - 3))) {
      alpha_ = 1;
      c0_ = 1;
    } else {
      alpha_ = 0;
      for (std::uint64_t c = 1; c < p; ++c) {
        if (non_residue(p - c)) {
          c0_ = c;
          break;
        }
      }
    }
  }
}

Semiring Semiring::boolean() { return {SemiringKind::kBool, 0, 0.0}; }
Semiring Semiring::nat() { return {SemiringKind::kNat, 0, 0.0}; }
Semiring Semiring::ratnn() { return {SemiringKind::kRatNonNeg, 0, 0.0}; }
Semiring Semiring::rat() { return {SemiringKind::kRat, 0, 0.0}; }
Semiring Semiring::gauss_rat() { return {SemiringKind::kGaussRat, 0, 0.0}; }
Semiring Semiring::split_rat() { return {SemiringKind::kSplitRat, 0, 0.0}; }
Semiring Semiring::gf(std::uint64_t p) { return {SemiringKind::kGF, p, 0.0}; }
Semiring Semiring::gf2(std::uint64_t p) { return {SemiringKind::kGF2, p, 0.0}; }
Semiring Semiring::complex_f64(double tolerance) {
  if (!(tolerance >= 0.0)) {
    fail(ErrorCode::kInvalidArgument, "tolerance must be nonnegative");
  }
  return {SemiringKind::kComplexF64, 0, tolerance};
}

Semiring Semiring::from_id(std::string_view raw) {
  std::string id;
  for (char c : raw) {
    id.push_back((c == '(' || c == ')') ? ' ' : c);
  }
  std::istringstream in(id);
  std::string head, arg, extra;
  in >> head >> arg >> extra;
  if (!extra.empty()) fail(ErrorCode::kInvalidArgument, "bad semiring id '" + std::string(raw) + "'");
  auto prime_arg = [&](const std::string& text) -> std::uint64_t {
    if (!all_digits(text)) {
      fail(ErrorCode::kInvalidArgument,
           "semiring '" + std::string(raw) + "' needs a prime argument");
    }
    return std::stoull(text);
  };
  if (arg.empty()) {
    if (head == "bool") return boolean();
    if (head == "nat") return nat();
    if (head == "ratnn") return ratnn();
    if (head == "rat") return rat();
    if (head == "gauss-rat") return gauss_rat();
    if (head == "split-rat") return split_rat();
    if (head == "complex-f64") return complex_f64();
    if (head.rfind("gf2", 0) == 0 && head.size() > 3) {
      return gf2(prime_arg(head.substr(3)));
    }
    if (head.rfind("gf", 0) == 0 && head.size() > 2) {
      return gf(prime_arg(head.substr(2)));
    }
  } else {
    if (head == "gf") return gf(prime_arg(arg));
    if (head == "gf2") return gf2(prime_arg(arg));
    if (head == "complex-f64") {
      std::size_t used = 0;
      double tol = -1.0;
      try {
        tol = std::stod(arg, &used);
      } catch (const std::exception&) {
      }
      if (used != arg.size() || !(tol > 0.0)) {
        fail(ErrorCode::kInvalidArgument, "complex-f64 needs a positive tolerance, got '" + arg + "'");
      }
      return complex_f64(tol);
    }
  }
  fail(ErrorCode::kInvalidArgument, "unknown semiring id '" + std::string(raw) + "'");
}

std::string Semiring::id() const {
  switch (kind_) {
    case SemiringKind::kBool: return "bool";
    case SemiringKind::kNat: return "nat";
    case SemiringKind::kRatNonNeg: return "ratnn";
    case SemiringKind::kRat: return "rat";
    case SemiringKind::kGaussRat: return "gauss-rat";
    case SemiringKind::kSplitRat: return "split-rat";
    case SemiringKind::kGF: return "gf " + std::to_string(p_);
    case SemiringKind::kGF2: return "gf2 " + std::to_string(p_);
    case SemiringKind::kComplexF64: return "complex-f64";
  }
  return "?";
}

bool Semiring::declared_positive() const {
  return kind_ == SemiringKind::kBool || kind_ == SemiringKind::kNat ||
         kind_ == SemiringKind::kRatNonNeg;
}

bool Semiring::has_additive_inverses() const { return !declared_positive(); }

bool Semiring::is_field() const {
  switch (kind_) {
    case SemiringKind::kRat:
    case SemiringKind::kGaussRat:
    case SemiringKind::kGF:
    case SemiringKind::kGF2:
    case SemiringKind::kComplexF64:
      return true;
    default:
      return false;
  }
}

bool Semiring::is_finite() const {
  return kind_ == SemiringKind::kBool || kind_ == SemiringKind::kGF ||
         kind_ == SemiringKind::kGF2;
}

std::uint64_t Semiring::mod_add(std::uint64_t a, std::uint64_t b) const {
  const std::uint64_t s = a + b;
  return s >= p_ ? s - p_ : s;
}

std::uint64_t Semiring::mod_mul(std::uint64_t a, std::uint64_t b) const {
  return (a * b) % p_;
}

std::uint64_t Semiring::mod_neg(std::uint64_t a) const {
  return a == 0 ? 0 : p_ - a;
}

std::uint64_t Semiring::mod_pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t result = 1 % p_;
  a %= p_;
  while (e > 0) {
    if (e & 1) result = mod_mul(result, a);
    a = mod_mul(a, a);
    e >>= 1;
  }
  return result;
}

ResiduePair Semiring::quad_mul(ResiduePair x, ResiduePair y) const {
  // t^2 = -alpha*t - c0
  const std::uint64_t bd = mod_mul(x.b, y.b);
  const std::uint64_t re = mod_add(mod_mul(x.a, y.a), mod_neg(mod_mul(bd, c0_)));
  const std::uint64_t im =
      mod_add(mod_add(mod_mul(x.a, y.b), mod_mul(x.b, y.a)),
              mod_neg(mod_mul(bd, alpha_)));
  return {re, im};
}

ResiduePair Semiring::quad_pow(ResiduePair x, std::uint64_t e) const {
  ResiduePair result{1 % p_, 0};
  while (e > 0) {
    if (e & 1) result = quad_mul(result, x);
    x = quad_mul(x, x);
    e >>= 1;
  }
  return result;
}

Element Semiring::zero() const { return from_int(0); }
Element Semiring::one() const { return from_int(1); }

Element Semiring::from_int(long long n) const {
  switch (kind_) {
    case SemiringKind::kBool:
      return n != 0;
    case SemiringKind::kNat:
      if (n < 0) fail(ErrorCode::kInvalidLiteral, "negative natural");
      return Integer(static_cast<long>(n));
    case SemiringKind::kRatNonNeg:
      if (n < 0) fail(ErrorCode::kInvalidLiteral, "negative value in ratnn");
      return Rational(static_cast<long>(n));
    case SemiringKind::kRat:
      return Rational(static_cast<long>(n));
    case SemiringKind::kGaussRat:
    case SemiringKind::kSplitRat:
      return QuadRational{Rational(static_cast<long>(n)), Rational(0)};
    case SemiringKind::kGF: {
      const long long m = n % static_cast<long long>(p_);
      return Residue{static_cast<std::uint64_t>(m < 0 ? m + static_cast<long long>(p_) : m)};
    }
    case SemiringKind::kGF2: {
      const long long m = n % static_cast<long long>(p_);
      return ResiduePair{static_cast<std::uint64_t>(m < 0 ? m + static_cast<long long>(p_) : m), 0};
    }
    case SemiringKind::kComplexF64:
      return std::complex<double>(static_cast<double>(n), 0.0);
  }
  return false;
}

Element Semiring::add(const Element& a, const Element& b) const {
  switch (kind_) {
    case SemiringKind::kBool:
      return as<bool>(a, "bool") || as<bool>(b, "bool");
    case SemiringKind::kNat:
      return Integer(as<Integer>(a, "nat") + as<Integer>(b, "nat"));
    case SemiringKind::kRatNonNeg:
    case SemiringKind::kRat:
      return Rational(as<Rational>(a, "rational") + as<Rational>(b, "rational"));
    case SemiringKind::kGaussRat:
    case SemiringKind::kSplitRat: {
      const auto& x = as<QuadRational>(a, "quadratic rational");
      const auto& y = as<QuadRational>(b, "quadratic rational");
      return QuadRational{x.re + y.re, x.im + y.im};
    }
    case SemiringKind::kGF:
      return Residue{mod_add(as<Residue>(a, "residue").value,
                             as<Residue>(b, "residue").value)};
    case SemiringKind::kGF2: {
      const auto x = as<ResiduePair>(a, "GF(p^2)");
      const auto y = as<ResiduePair>(b, "GF(p^2)");
      return ResiduePair{mod_add(x.a, y.a), mod_add(x.b, y.b)};
    }
    case SemiringKind::kComplexF64:
      return as<std::complex<double>>(a, "complex") +
             as<std::complex<double>>(b, "complex");
  }
  return a;
}

Element Semiring::mul(const Element& a, const Element& b) const {
  switch (kind_) {
    case SemiringKind::kBool:
      return as<bool>(a, "bool") && as<bool>(b, "bool");
    case SemiringKind::kNat:
      return Integer(as<Integer>(a, "nat") * as<Integer>(b, "nat"));
    case SemiringKind::kRatNonNeg:
    case SemiringKind::kRat:
      return Rational(as<Rational>(a, "rational") * as<Rational>(b, "rational"));
    case SemiringKind::kGaussRat:
    case SemiringKind::kSplitRat: {
      const auto& x = as<QuadRational>(a, "quadratic rational");
      const auto& y = as<QuadRational>(b, "quadratic rational");
      const Rational ii = x.im * y.im;
      return QuadRational{
          kind_ == SemiringKind::kGaussRat ? Rational(x.re * y.re - ii)
                                           : Rational(x.re * y.re + ii),
          x.re * y.im + x.im * y.re};
    }
    case SemiringKind::kGF:
      return Residue{mod_mul(as<Residue>(a, "residue").value,
                             as<Residue>(b, "residue").value)};
    case SemiringKind::kGF2:
      return quad_mul(as<ResiduePair>(a, "GF(p^2)"), as<ResiduePair>(b, "GF(p^2)"));
    case SemiringKind::kComplexF64:
      return as<std::complex<double>>(a, "complex") *
             as<std::complex<double>>(b, "complex");
  }
  return a;
}

Element Semiring::conj(const Element& a) const {
  switch (kind_) {
    case SemiringKind::kGaussRat:
    case SemiringKind::kSplitRat: {
      const auto& x = as<QuadRational>(a, "quadratic rational");
      return QuadRational{x.re, -x.im};
    }
    case SemiringKind::kGF2:
      return quad_pow(as<ResiduePair>(a, "GF(p^2)"), p_);
    case SemiringKind::kComplexF64:
      return std::conj(as<std::complex<double>>(a, "complex"));
    default:
      if (!contains(a)) {
        fail(ErrorCode::kSemiringMismatch, "element not in " + id());
      }
      return a;
  }
}

Element Semiring::negate(const Element& a) const {
  switch (kind_) {
    case SemiringKind::kRat:
      return Rational(-as<Rational>(a, "rational"));
    case SemiringKind::kGaussRat:
    case SemiringKind::kSplitRat: {
      const auto& x = as<QuadRational>(a, "quadratic rational");
      return QuadRational{-x.re, -x.im};
    }
    case SemiringKind::kGF:
      return Residue{mod_neg(as<Residue>(a, "residue").value)};
    case SemiringKind::kGF2: {
      const auto x = as<ResiduePair>(a, "GF(p^2)");
      return ResiduePair{mod_neg(x.a), mod_neg(x.b)};
    }
    case SemiringKind::kComplexF64:
      return -as<std::complex<double>>(a, "complex");
    default:
      fail(ErrorCode::kUnsupported, id() + " has no additive inverses");
  }
}

Element Semiring::subtract(const Element& a, const Element& b) const {
  return add(a, negate(b));
}

bool Semiring::equal(const Element& a, const Element& b) const {
  if (kind_ == SemiringKind::kComplexF64) {
    const auto& x = as<std::complex<double>>(a, "complex");
    const auto& y = as<std::complex<double>>(b, "complex");
    return std::abs(x.real() - y.real()) <= tolerance_ &&
           std::abs(x.imag() - y.imag()) <= tolerance_;
  }
  return a == b;
}

bool Semiring::is_invertible(const Element& a) const {
  switch (kind_) {
    case SemiringKind::kBool:
      return as<bool>(a, "bool");
    case SemiringKind::kNat:
      return as<Integer>(a, "nat") == 1;
    case SemiringKind::kRatNonNeg:
    case SemiringKind::kRat:
      return as<Rational>(a, "rational") != 0;
    case SemiringKind::kGaussRat: {
      const auto& x = as<QuadRational>(a, "quadratic rational");
      return x.re != 0 || x.im != 0;
    }
    case SemiringKind::kSplitRat: {
      const auto& x = as<QuadRational>(a, "quadratic rational");
      return x.re * x.re != x.im * x.im;
    }
    case SemiringKind::kGF:
      return as<Residue>(a, "residue").value != 0;
    case SemiringKind::kGF2: {
      const auto x = as<ResiduePair>(a, "GF(p^2)");
      return x.a != 0 || x.b != 0;
    }
    case SemiringKind::kComplexF64:
      return std::abs(as<std::complex<double>>(a, "complex")) > tolerance_;
  }
  return false;
}

Element Semiring::inverse(const Element& a) const {
  if (!is_invertible(a)) {
    fail(ErrorCode::kConditioningUndefined,
         format(a) + " is not invertible in " + id());
  }
  switch (kind_) {
    case SemiringKind::kRatNonNeg:
    case SemiringKind::kRat:
      return Rational(1 / as<Rational>(a, "rational"));
    case SemiringKind::kGaussRat: {
      const auto& x = as<QuadRational>(a, "quadratic rational");
      const Rational n = x.re * x.re + x.im * x.im;
      return QuadRational{x.re / n, -x.im / n};
    }
    case SemiringKind::kSplitRat: {
      const auto& x = as<QuadRational>(a, "quadratic rational");
      const Rational n = x.re * x.re - x.im * x.im;
      return QuadRational{x.re / n, -x.im / n};
    }
    case SemiringKind::kGF:
      return Residue{mod_pow(as<Residue>(a, "residue").value, p_ - 2)};
    case SemiringKind::kGF2:
      return quad_pow(as<ResiduePair>(a, "GF(p^2)"), p_ * p_ - 2);
    case SemiringKind::kComplexF64:
      return 1.0 / as<std::complex<double>>(a, "complex");
    default:
      return a;  // bool true, nat 1
  }
}

bool Semiring::contains(const Element& a) const {
  switch (kind_) {
    case SemiringKind::kBool:
      return std::holds_alternative<bool>(a);
    case SemiringKind::kNat: {
      const auto* v = std::get_if<Integer>(&a);
      return v != nullptr && *v >= 0;
    }
    case SemiringKind::kRatNonNeg: {
      const auto* v = std::get_if<Rational>(&a);
      return v != nullptr && *v >= 0 && v->get_den() > 0;
    }
    case SemiringKind::kRat: {
      const auto* v = std::get_if<Rational>(&a);
      return v != nullptr && v->get_den() > 0;
    }
    case SemiringKind::kGaussRat:
    case SemiringKind::kSplitRat:
      return std::holds_alternative<QuadRational>(a);
    case SemiringKind::kGF: {
      const auto* v = std::get_if<Residue>(&a);
      return v != nullptr && v->value < p_;
    }
    case SemiringKind::kGF2: {
      const auto* v = std::get_if<ResiduePair>(&a);
      return v != nullptr && v->a < p_ && v->b < p_;
    }
    case SemiringKind::kComplexF64:
      return std::holds_alternative<std::complex<double>>(a);
  }
  return false;
}

Element Semiring::normalize(const Element& a) const {
  switch (kind_) {
    case SemiringKind::kRatNonNeg:
    case SemiringKind::kRat: {
      Rational q = as<Rational>(a, "rational");
      q.canonicalize();
      return q;
    }
    case SemiringKind::kGaussRat:
    case SemiringKind::kSplitRat: {
      QuadRational x = as<QuadRational>(a, "quadratic rational");
      x.re.canonicalize();
      x.im.canonicalize();
      return x;
    }
    case SemiringKind::kGF:
      return Residue{as<Residue>(a, "residue").value % p_};
    case SemiringKind::kGF2: {
      const auto x = as<ResiduePair>(a, "GF(p^2)");
      return ResiduePair{x.a % p_, x.b % p_};
    }
    default:
      return a;
  }
}

Element Semiring::parse(std::string_view literal) const {
  const std::string text = strip_spaces(literal);
  switch (kind_) {
    case SemiringKind::kBool:
      if (text == "1" || text == "true") return true;
      if (text == "0" || text == "false") return false;
      bad_literal(literal, "expected 0, 1, true or false");
    case SemiringKind::kNat: {
      if (!all_digits(text)) bad_literal(literal, "expected a natural number");
      return Integer(std::string(text), 10);
    }
    case SemiringKind::kRatNonNeg:
    case SemiringKind::kRat: {
      const auto [re, im] = parse_quad_rational(text, 0);
      if (kind_ == SemiringKind::kRatNonNeg && re < 0) {
        bad_literal(literal, "negative value in ratnn");
      }
      return re;
    }
    case SemiringKind::kGaussRat:
    case SemiringKind::kSplitRat: {
      const auto [re, im] = parse_quad_rational(
          text, kind_ == SemiringKind::kGaussRat ? 'i' : 'j');
      return QuadRational{re, im};
    }
    case SemiringKind::kGF: {
      const auto [re, im] = parse_quad_rational(text, 0);
      const Integer p(static_cast<unsigned long>(p_));
      Integer num = re.get_num() % p;
      if (num < 0) num += p;
      Element r = Residue{num.get_ui()};
      if (re.get_den() != 1) {
        Integer den = re.get_den() % p;
        if (den == 0) bad_literal(literal, "denominator divisible by p");
        r = mul(r, inverse(Residue{den.get_ui()}));
      }
      return r;
    }
    case SemiringKind::kGF2: {
      const auto [re, im] = parse_quad_rational(text, 't');
      if (re.get_den() != 1 || im.get_den() != 1) {
        bad_literal(literal, "GF(p^2) coordinates must be integers");
      }
      const Integer p(static_cast<unsigned long>(p_));
      Integer a = re.get_num() % p;
      Integer b = im.get_num() % p;
      if (a < 0) a += p;
      if (b < 0) b += p;
      return ResiduePair{a.get_ui(), b.get_ui()};
    }
    case SemiringKind::kComplexF64: {
      double re = 0.0, im = 0.0;
      bool seen_re = false, seen_im = false;
      for (const Term& t : split_terms(text, 'i')) {
        double v = parse_double_coeff(t.coeff, literal);
        if (t.negative) v = -v;
        bool& seen = t.has_unit ? seen_im : seen_re;
        if (seen) bad_literal(literal, "repeated component");
        seen = true;
        (t.has_unit ? im : re) = v;
      }
      return std::complex<double>(re, im);
    }
  }
  bad_literal(literal, "unsupported");
}

std::string Semiring::format(const Element& a) const {
  switch (kind_) {
    case SemiringKind::kBool:
      return as<bool>(a, "bool") ? "1" : "0";
    case SemiringKind::kNat:
      return as<Integer>(a, "nat").get_str();
    case SemiringKind::kRatNonNeg:
    case SemiringKind::kRat:
      return as<Rational>(a, "rational").get_str();
    case SemiringKind::kGaussRat:
    case SemiringKind::kSplitRat: {
      const auto& x = as<QuadRational>(a, "quadratic rational");
      const Rational abs_im = abs(x.im);
      return format_quad(x.re.get_str(), x.re == 0, abs_im.get_str(),
                         x.im == 0, x.im < 0, abs_im == 1,
                         kind_ == SemiringKind::kGaussRat ? 'i' : 'j');
    }
    case SemiringKind::kGF:
      return std::to_string(as<Residue>(a, "residue").value);
    case SemiringKind::kGF2: {
      const auto x = as<ResiduePair>(a, "GF(p^2)");
      return format_quad(std::to_string(x.a), x.a == 0, std::to_string(x.b),
                         x.b == 0, false, x.b == 1, 't');
    }
    case SemiringKind::kComplexF64: {
      const auto& x = as<std::complex<double>>(a, "complex");
      const bool im_zero = x.imag() == 0.0;
      const double abs_im = std::abs(x.imag());
      return format_quad(format_double(x.real()), x.real() == 0.0,
                         format_double(abs_im), im_zero, x.imag() < 0.0,
                         abs_im == 1.0, 'i');
    }
  }
  return "?";
}

Element Semiring::sample(std::mt19937_64& rng) const {
  switch (kind_) {
    case SemiringKind::kBool:
      return std::bernoulli_distribution(0.5)(rng);
    case SemiringKind::kNat:
      return Integer(std::uniform_int_distribution<int>(0, 5)(rng));
    case SemiringKind::kRatNonNeg:
      return random_rational(rng, false);
    case SemiringKind::kRat:
      return random_rational(rng, true);
    case SemiringKind::kGaussRat:
    case SemiringKind::kSplitRat: {
      Rational re = random_rational(rng, true);
      Rational im = std::bernoulli_distribution(0.25)(rng)
                        ? Rational(0)
                        : random_rational(rng, true);
      return QuadRational{re, im};
    }
    case SemiringKind::kGF:
      return Residue{std::uniform_int_distribution<std::uint64_t>(0, p_ - 1)(rng)};
    case SemiringKind::kGF2: {
      std::uniform_int_distribution<std::uint64_t> d(0, p_ - 1);
      const std::uint64_t a = d(rng);
      return ResiduePair{a, d(rng)};
    }
    case SemiringKind::kComplexF64: {
      std::uniform_real_distribution<double> d(-2.0, 2.0);
      const double re = d(rng);
      return std::complex<double>(re, d(rng));
    }
  }
  return zero();
}

std::vector<Element> Semiring::sample_set() const {
  if (auto all = enumerate(); all && all->size() <= 49) return *all;
  std::vector<std::string> literals;
  switch (kind_) {
    case SemiringKind::kNat:
      literals = {"0", "1", "2", "3"};
      break;
    case SemiringKind::kRatNonNeg:
      literals = {"0", "1/2", "1", "2"};
      break;
    case SemiringKind::kRat:
      literals = {"0", "1", "-1", "1/2", "-1/2", "2"};
      break;
    case SemiringKind::kGaussRat:
      literals = {"0", "1", "-1", "i", "-i", "1+i"};
      break;
    case SemiringKind::kSplitRat:
      literals = {"0", "1", "-1", "j", "-j", "1+j"};
      break;
    case SemiringKind::kComplexF64:
      literals = {"0", "1", "-1", "i", "-i", "0.5"};
      break;
    case SemiringKind::kGF:
    case SemiringKind::kGF2:
      for (int n = 0; n < 11; ++n) literals.push_back(std::to_string(n));
      break;
    case SemiringKind::kBool:
      literals = {"0", "1"};
      break;
  }
  std::vector<Element> out;
  for (const auto& l : literals) out.push_back(parse(l));
  return out;
}

std::optional<std::vector<Element>> Semiring::enumerate() const {
  std::vector<Element> out;
  switch (kind_) {
    case SemiringKind::kBool:
      return std::vector<Element>{false, true};
    case SemiringKind::kGF:
      if (p_ > 4096) return std::nullopt;
      for (std::uint64_t v = 0; v < p_; ++v) out.push_back(Residue{v});
      return out;
    case SemiringKind::kGF2:
      if (p_ > 64) return std::nullopt;
      for (std::uint64_t a = 0; a < p_; ++a) {
        for (std::uint64_t b = 0; b < p_; ++b) out.push_back(ResiduePair{a, b});
      }
      return out;
    default:
      return std::nullopt;
  }
}

std::complex<double> Semiring::to_complex(const Element& a) const {
  switch (kind_) {
    case SemiringKind::kBool:
      return as<bool>(a, "bool") ? 1.0 : 0.0;
    case SemiringKind::kNat:
      return as<Integer>(a, "nat").get_d();
    case SemiringKind::kRatNonNeg:
    case SemiringKind::kRat:
      return as<Rational>(a, "rational").get_d();
    case SemiringKind::kGaussRat: {
      const auto& x = as<QuadRational>(a, "quadratic rational");
      return {x.re.get_d(), x.im.get_d()};
    }
    case SemiringKind::kComplexF64:
      return as<std::complex<double>>(a, "complex");
    default:
      fail(ErrorCode::kUnsupported, id() + " has no complex embedding");
  }
}

std::optional<Element> convert(const Element& x, const Semiring& from,
                               const Semiring& to) {
  if (!from.contains(x)) {
    fail(ErrorCode::kSemiringMismatch, "element not in " + from.id());
  }
  if (from == to) return x;
  // Lift to the widest exact representation, then narrow to the target.
  std::optional<QuadRational> q;
  std::optional<ResiduePair> r;
  std::optional<bool> b;
  std::optional<std::complex<double>> c;
  switch (from.kind()) {
    case SemiringKind::kBool:
      b = std::get<bool>(x);
      break;
    case SemiringKind::kNat:
      q = QuadRational{Rational(std::get<Integer>(x)), Rational(0)};
      break;
    case SemiringKind::kRatNonNeg:
    case SemiringKind::kRat:
      q = QuadRational{std::get<Rational>(x), Rational(0)};
      break;
    case SemiringKind::kGaussRat:
    case SemiringKind::kSplitRat:
      q = std::get<QuadRational>(x);
      break;
    case SemiringKind::kGF:
      r = ResiduePair{std::get<Residue>(x).value, 0};
      break;
    case SemiringKind::kGF2:
      r = std::get<ResiduePair>(x);
      break;
    case SemiringKind::kComplexF64:
      c = std::get<std::complex<double>>(x);
      break;
  }
  const bool quad_kinds_compatible =
      !(from.kind() == SemiringKind::kGaussRat &&
        to.kind() == SemiringKind::kSplitRat) &&
      !(from.kind() == SemiringKind::kSplitRat &&
        (to.kind() == SemiringKind::kGaussRat ||
         to.kind() == SemiringKind::kComplexF64));
  switch (to.kind()) {
    case SemiringKind::kBool:
      if (b) return *b;
      return std::nullopt;
    case SemiringKind::kNat:
      if (q && q->im == 0 && q->re >= 0 && q->re.get_den() == 1) {
        return Integer(q->re.get_num());
      }
      return std::nullopt;
    case SemiringKind::kRatNonNeg:
      if (q && q->im == 0 && q->re >= 0) return q->re;
      return std::nullopt;
    case SemiringKind::kRat:
      if (q && q->im == 0) return q->re;
      return std::nullopt;
    case SemiringKind::kGaussRat:
    case SemiringKind::kSplitRat:
      if (q && (q->im == 0 || quad_kinds_compatible)) return *q;
      return std::nullopt;
    case SemiringKind::kGF:
      if (r && from.characteristic() == to.characteristic() && r->b == 0) {
        return Residue{r->a};
      }
      return std::nullopt;
    case SemiringKind::kGF2:
      if (r && from.characteristic() == to.characteristic() &&
          (from.kind() == SemiringKind::kGF || r->b == 0)) {
        return *r;
      }
      return std::nullopt;
    case SemiringKind::kComplexF64:
      if (c) return *c;
      if (q && quad_kinds_compatible) {
        return std::complex<double>(q->re.get_d(), q->im.get_d());
      }
      return std::nullopt;
  }
  return std::nullopt;
}

PositivityReport is_positive(const Semiring& s) {
  if (!s.exact()) {
    fail(ErrorCode::kUnsupportedMode,
         "positivity is only reported for exact semirings");
  }
  PositivityReport report;
  report.positive = s.declared_positive();
  if (!report.positive) {
    // 1 + (-1) = 0; in characteristic p this is 1 + (p-1).
    report.witness = {s.one(), s.negate(s.one())};
    if (!s.is_zero(s.add(report.witness[0], report.witness[1]))) {
      fail(ErrorCode::kInvalidArgument, "stored positivity witness is wrong");
    }
  }
  return report;
}

Semiring scalar_subsemiring(const Semiring& s) {
  if (!s.exact()) {
    fail(ErrorCode::kUnsupportedMode,
         "scalar sub-semiring lookup needs an exact semiring");
  }
  Semiring r = Semiring::boolean();
  switch (s.kind()) {
    case SemiringKind::kBool:
      r = Semiring::boolean();
      break;
    case SemiringKind::kRat:
    case SemiringKind::kGaussRat:
      r = Semiring::ratnn();
      break;
    case SemiringKind::kSplitRat:
      r = Semiring::rat();
      break;
    case SemiringKind::kGF2:
      r = Semiring::gf(s.characteristic());
      break;
    default:
      fail(ErrorCode::kNotInTable,
           "no positive sub-semiring entry for " + s.id());
  }
  // Every x* x must land in r.
  std::vector<Element> probes;
  if (auto all = s.enumerate()) {
    probes = std::move(*all);
  } else {
    std::mt19937_64 rng(0x5eed);
    for (int i = 0; i < 256; ++i) probes.push_back(s.sample(rng));
    for (const auto& e : s.sample_set()) probes.push_back(e);
  }
  for (const Element& x : probes) {
    const Element sq = s.mul(s.conj(x), x);
    if (!convert(sq, s, r)) {
      fail(ErrorCode::kNotInTable, "x*x = " + s.format(sq) + " for x = " +
                                       s.format(x) + " is outside " + r.id());
    }
  }
  return r;
}

}  // namespace catprob
