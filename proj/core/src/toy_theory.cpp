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

#include "catprob/toy_theory.hpp"

#include <cctype>

#include "catprob/error.hpp"

namespace catprob::quantum {

namespace {

std::string lower(std::string_view in) {
  std::string out(in);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// "modal(3)", "modal 3", "modal3" -> 3; nullopt when not a modal name.
std::optional<std::uint64_t> modal_prime(const std::string& name) {
  if (name.rfind("modal", 0) != 0) return std::nullopt;
  std::string rest = name.substr(5);
  std::string digits;
  for (char c : rest) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
    } else if (c != '(' && c != ')' && c != ' ') {
      fail(ErrorCode::kInvalidArgument, "bad modal theory name '" + name + "'");
    }
  }
  if (digits.empty()) fail(ErrorCode::kInvalidArgument, "modal theory needs a prime");
  return std::stoull(digits);
}

QuantumBackend exact_theory(const std::string& name, const Semiring& s) {
  return QuantumBackend(name, s, scalar_subsemiring(s));
}

}  // namespace

QuantumBackend toy_theory(std::string_view requested) {
  const std::string name = lower(requested);
  if (name.rfind("p-adic", 0) == 0 || name.rfind("padic", 0) == 0) {
    fail(ErrorCode::kOutOfScope, "p-adic quantum theory is not supported");
  }
  if (name == "quantum-exact") return exact_theory(name, Semiring::gauss_rat());
  if (name == "quantum-f64") {
    // Probabilities are the nonnegative reals inside complex-f64; extraction
    // checks the sign and imaginary part against the tolerance.
    return QuantumBackend(name, Semiring::complex_f64(), Semiring::complex_f64());
  }
  if (name == "real") return exact_theory(name, Semiring::rat());
  if (name == "hyperbolic") return exact_theory(name, Semiring::split_rat());
  if (name == "relational") return exact_theory(name, Semiring::boolean());
  if (auto p = modal_prime(name)) {
    return exact_theory("modal(" + std::to_string(*p) + ")", Semiring::gf2(*p));
  }
  fail(ErrorCode::kInvalidArgument, "unknown toy theory '" + std::string(requested) + "'");
}

QuantumBackend theory_for_semiring(const Semiring& s) {
  switch (s.kind()) {
    case SemiringKind::kGaussRat:
      return toy_theory("quantum-exact");
    case SemiringKind::kComplexF64:
      return QuantumBackend("quantum-f64", s, s);
    case SemiringKind::kRat:
      return toy_theory("real");
    case SemiringKind::kSplitRat:
      return toy_theory("hyperbolic");
    case SemiringKind::kBool:
      return toy_theory("relational");
    case SemiringKind::kGF2:
      return toy_theory("modal(" + std::to_string(s.characteristic()) + ")");
    default:
      return QuantumBackend("doubled " + s.id(), s, scalar_subsemiring(s));
  }
}

std::vector<ToyTheoryInfo> toy_zoo() {
  return {
      {"quantum-exact", "gauss-rat", "complex conjugation", "ratnn", "quantum theory"},
      {"quantum-f64", "complex-f64", "complex conjugation", "complex-f64 (nonnegative reals)",
       "quantum theory"},
      {"real", "rat", "identity", "ratnn", "real quantum theory"},
      {"hyperbolic", "split-rat", "a+bj -> a-bj", "rat", "hyperbolic quantum theory"},
      {"relational", "bool", "identity", "bool", "relational quantum theory"},
      {"modal(2)", "gf2 2", "Frobenius x -> x^2", "gf 2", "modal quantum theory"},
  };
}

Matrix hyperbolic_witness_state() {
  return Matrix::from_literals(Semiring::split_rat(), {{"5/4"}, {"3/4j"}});
}

}  // namespace catprob::quantum
