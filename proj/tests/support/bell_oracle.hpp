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

#include <string>
#include <vector>

#include "support/oracle.hpp"

namespace catprob::oracle {

// Density-matrix reference for two parties with effects given by Kraus rows:
// P(a, b | x, y) = w Tr((E_xa (x) F_yb) psi psi^dagger), E = sum K^dagger K.
struct TwoPartyOracle {
  Semiring s;
  Element weight;
  std::vector<Element> psi;
  // [choice][outcome] -> Kraus rows
  std::vector<std::vector<Dense>> alice;
  std::vector<std::vector<Dense>> bob;

  Dense effect(const Dense& rows) const {
    const std::size_t d = rows[0].size();
    Dense e(d, std::vector<Element>(d, s.zero()));
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          e[i][j] = s.add(e[i][j], s.mul(s.conj(row[i]), row[j]));
        }
      }
    }
    return e;
  }

  Element probability(std::size_t x, std::size_t y, std::size_t a,
                      std::size_t b) const {
    const Dense op = oracle::kron(s, effect(alice[x][a]), effect(bob[y][b]));
    Element total = s.zero();
    for (std::size_t i = 0; i < psi.size(); ++i) {
      for (std::size_t j = 0; j < psi.size(); ++j) {
        const Element rho_ji = s.mul(psi[j], s.conj(psi[i]));
        total = s.add(total, s.mul(op[i][j], rho_ji));
      }
    }
    return s.mul(weight, total);
  }
};

inline Dense rows(const Semiring& s, std::vector<std::vector<std::string>> lits) {
  return oracle::dense(Matrix::from_literals(s, lits));
}

// Phi+ with the 3-4-5 rational measurement bases.
inline TwoPartyOracle chsh_345_oracle() {
  const Semiring s = Semiring::gauss_rat();
  TwoPartyOracle o{s, s.parse("1/2"), {s.one(), s.zero(), s.zero(), s.one()}, {}, {}};
  o.alice = {{rows(s, {{"1", "0"}}), rows(s, {{"0", "1"}})},
             {rows(s, {{"3/5", "4/5"}}), rows(s, {{"-4/5", "3/5"}})}};
  o.bob = {{rows(s, {{"1", "0"}}), rows(s, {{"0", "1"}})},
           {rows(s, {{"4/5", "-3/5"}}), rows(s, {{"3/5", "4/5"}})}};
  return o;
}

}  // namespace catprob::oracle
