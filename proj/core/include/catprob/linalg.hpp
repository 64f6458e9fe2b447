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

#include <cstddef>
#include <optional>

#include "catprob/matrix.hpp"

namespace catprob::linalg {

// Rank by exact Gaussian elimination over a field (ratnn is lifted to rat);
// singular-value count above the tolerance in approximate mode. Other
// semirings throw kUnsupported.
std::size_t rank(const Matrix& m);

// Gauss-Jordan inverse over any semiring with additive inverses, pivoting on
// invertible entries. Returns nullopt when no invertible pivot exists (which
// for split-rat can happen even for invertible matrices).
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace catprob::linalg
