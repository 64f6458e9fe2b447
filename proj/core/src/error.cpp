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

#include "catprob/error.hpp"

namespace catprob {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kInvalidLiteral: return "invalid-literal";
    case ErrorCode::kShapeMismatch: return "shape-mismatch";
    case ErrorCode::kSemiringMismatch: return "semiring-mismatch";
    case ErrorCode::kUnsupportedMode: return "unsupported-mode";
    case ErrorCode::kNotInTable: return "not-in-table";
    case ErrorCode::kInvalidFactorSplit: return "invalid-factor-split";
    case ErrorCode::kConditioningUndefined: return "conditioning-undefined";
    case ErrorCode::kNotNormalised: return "not-normalised";
    case ErrorCode::kNotIdempotent: return "not-idempotent";
    case ErrorCode::kNotAHom: return "not-a-hom";
    case ErrorCode::kInvalidSpo: return "invalid-spo";
    case ErrorCode::kNotDecohered: return "not-decohered";
    case ErrorCode::kTolerance: return "tolerance";
    case ErrorCode::kUnsupported: return "unsupported";
    case ErrorCode::kNotCp: return "not-cp";
    case ErrorCode::kOutOfScope: return "out-of-scope";
    case ErrorCode::kInvalidScenario: return "invalid-scenario";
    case ErrorCode::kSyntax: return "syntax";
    case ErrorCode::kDuplicateDeclaration: return "duplicate-declaration";
    case ErrorCode::kType: return "type";
    case ErrorCode::kUnboundGenerator: return "unbound-generator";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

}  // namespace catprob
