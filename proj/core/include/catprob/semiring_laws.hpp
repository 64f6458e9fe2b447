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

#pragma once

#include <concepts>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "catprob/error.hpp"

namespace catprob {

// Anything with commutative-involutive-semiring shaped operations. `Semiring`
// models it; so can test doubles.
template <typename S>
concept SemiringModel = requires(const S& s, const typename S::value_type& a,
                                 std::mt19937_64& rng) {
  { s.zero() } -> std::convertible_to<typename S::value_type>;
  { s.one() } -> std::convertible_to<typename S::value_type>;
  { s.add(a, a) } -> std::convertible_to<typename S::value_type>;
  { s.mul(a, a) } -> std::convertible_to<typename S::value_type>;
  { s.conj(a) } -> std::convertible_to<typename S::value_type>;
  { s.equal(a, a) } -> std::convertible_to<bool>;
  { s.sample(rng) } -> std::convertible_to<typename S::value_type>;
  { s.format(a) } -> std::convertible_to<std::string>;
};

struct LawViolation {
  std::string law;
  std::string witness;  // first failing sample
  int count = 0;
};

struct AxiomReport {
  int samples = 0;
  std::vector<LawViolation> violations;

  bool ok() const { return violations.empty(); }
};

// Samples `budget` triples and checks the commutative semiring laws and the
// involution laws on each. Deterministic for a given seed.
template <SemiringModel S>
AxiomReport axioms_check(const S& s, int budget, std::uint64_t seed = 0) {
  if (budget < 1) fail(ErrorCode::kInvalidArgument, "budget must be >= 1");
  AxiomReport report;
  report.samples = budget;
  std::mt19937_64 rng(seed);

  auto record = [&](const char* law, bool holds, const std::string& witness) {
    if (holds) return;
    for (auto& v : report.violations) {
      if (v.law == law) {
        ++v.count;
        return;
      }
    }
    report.violations.push_back({law, witness, 1});
  };

  for (int i = 0; i < budget; ++i) {
    const auto a = s.sample(rng);
    const auto b = s.sample(rng);
    const auto c = s.sample(rng);
    const std::string w =
        "(" + s.format(a) + ", " + s.format(b) + ", " + s.format(c) + ")";
    const auto& z = s.zero();
    const auto& o = s.one();

    record("add associative",
           s.equal(s.add(s.add(a, b), c), s.add(a, s.add(b, c))), w);
    record("add commutative", s.equal(s.add(a, b), s.add(b, a)), w);
    record("add identity", s.equal(s.add(a, z), a), w);
    record("mul associative",
           s.equal(s.mul(s.mul(a, b), c), s.mul(a, s.mul(b, c))), w);
    record("mul commutative", s.equal(s.mul(a, b), s.mul(b, a)), w);
    record("mul identity", s.equal(s.mul(a, o), a), w);
    record("zero annihilates", s.equal(s.mul(a, z), z), w);
    record("distributive",
           s.equal(s.mul(a, s.add(b, c)), s.add(s.mul(a, b), s.mul(a, c))),
           w);
    record("involution self-inverse", s.equal(s.conj(s.conj(a)), a), w);
    record("involution additive",
           s.equal(s.conj(s.add(a, b)), s.add(s.conj(a), s.conj(b))), w);
    record("involution multiplicative",
           s.equal(s.conj(s.mul(a, b)), s.mul(s.conj(a), s.conj(b))), w);
  }
  return report;
}

}  // namespace catprob
