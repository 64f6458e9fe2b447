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

// Reading Bell scenarios from text. Lines are directives, '#' starts a
// comment, and a bracketed literal may continue over several lines.
//
//   backend quantum | classical      (default quantum)
//   semiring <id>                    amplitudes (quantum) or probabilities
//   theory <toy theory name>         quantum backend of a toy theory
//   party <name>
//     choices <label>...
//     outcomes <label>...
//     dim <n> | labels <label>...    quantum wire / classical system
//     kraus <choice> <outcome> <matrix>    quantum: rows map the system to
//                                          a discarded environment
//     effect <choice> <outcome> <row>      classical: response weights
//     measurement <matrix>                 the whole choices (x) system ->
//                                          outcomes matrix
//   state kraus <weight> <vector> | state density <matrix>   (quantum)
//   state vector <vector>                                    (classical)
//
// Repeated kraus lines for one choice and outcome add up, as do repeated
// state kraus lines.

#pragma once

#include <filesystem>
#include <string_view>
#include <variant>

#include "catprob/backend.hpp"
#include "catprob/bell.hpp"
#include "catprob/quantum.hpp"

namespace catprob::bell {

using AnyScenario =
    std::variant<Scenario<ClassicalBackend>, Scenario<quantum::QuantumBackend>>;

// Throws kSyntax (with the line number) for malformed text and
// kInvalidScenario for a well-formed but invalid scenario.
AnyScenario parse_scenario(std::string_view text);
// kIo when the file cannot be read.
AnyScenario load_scenario(const std::filesystem::path& path);

}  // namespace catprob::bell
