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

// The toy theories obtained by running the doubled construction over other
// involutive semirings.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "catprob/quantum.hpp"

namespace catprob::quantum {

struct ToyTheoryInfo {
  std::string name;
  std::string s;           // semiring of amplitudes
  std::string involution;  // description of the involution on S
  std::string r;           // semiring of probabilities
  std::string known_as;
};

// quantum-exact, quantum-f64, real, hyperbolic, relational, modal(p) (also
// written "modal p"). p-adic theories throw kOutOfScope; unknown names throw
// kInvalidArgument.
QuantumBackend toy_theory(std::string_view name);

// The doubled theory over an involutive semiring, named after the matching
// toy theory when there is one.
QuantumBackend theory_for_semiring(const Semiring& s);

// One row per supported theory, modal at p = 2.
std::vector<ToyTheoryInfo> toy_zoo();

// A normalised hyperbolic state whose doubled diagonal is (25/16, -9/16).
Matrix hyperbolic_witness_state();

}  // namespace catprob::quantum
