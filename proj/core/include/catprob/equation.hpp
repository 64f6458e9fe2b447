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

// Checking diagrammatic equations: both sides are evaluated under the same
// randomly drawn generator bindings, once per backend the bindings name.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "catprob/backend.hpp"
#include "catprob/diagram.hpp"
#include "catprob/quantum.hpp"

namespace catprob::diagram {

using AnyBackend = std::variant<ClassicalBackend, quantum::QuantumBackend>;

std::string backend_name(const AnyBackend& b);

// One backend per `semiring` line (classical by default, the doubled theory
// with `backend quantum`) and one per `theory` line. A nonempty `semirings`
// replaces the program's own semiring lines. kInvalidArgument if nothing is
// named.
std::vector<AnyBackend> backends_of(const Program& p,
                                    const std::vector<std::string>& semirings = {});

struct EquationRun {
  std::string backend;
  std::size_t trials = 0;
  // First differing entry, when the sides differ.
  std::optional<std::string> difference;

  bool equal() const { return !difference.has_value(); }
};

struct EquationReport {
  std::string type;  // "dom -> cod" of both sides
  std::vector<EquationRun> runs;

  bool ok() const;
};

// Trial t draws its bindings from a generator seeded with seed + t.
EquationReport check_equation(std::string_view lhs, std::string_view rhs,
                              std::string_view bindings, std::size_t trials,
                              std::uint64_t seed,
                              const std::vector<std::string>& semirings = {});

// A directory holding lhs.diag, rhs.diag and bindings.txt.
EquationReport check_equation_dir(const std::filesystem::path& dir, std::size_t trials,
                                  std::uint64_t seed);

struct Evaluation {
  std::string backend;
  std::string type;
  Matrix matrix;
};

// Evaluates the term of a document once per backend, binding random
// generators from `seed`.
std::vector<Evaluation> evaluate_document(std::string_view source, std::uint64_t seed,
                                          const std::vector<std::string>& semirings = {});

// kIo when the file cannot be read.
std::string read_file(const std::filesystem::path& path);

}  // namespace catprob::diagram
