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

// The classical theory Mat(R): finite label sets as objects, R-valued
// matrices as processes, Kronecker product as tensor, all-ones rows as
// discarding maps, and the operational constructions built from them.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catprob/matrix.hpp"

namespace catprob::matcat {

// An ordered, nonempty list of distinct labels. The tensor unit is the
// singleton labelled "*"; tensoring with it is strict. Tensor labels are the
// factor labels joined with ',' (first factor major), so tensor is strictly
// associative on objects as well.
class ClassicalObject {
 public:
  explicit ClassicalObject(std::vector<std::string> labels);

  static ClassicalObject unit();
  // Labels "0", "1", ..., "n-1".
  static ClassicalObject range(std::size_t n);

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  bool is_unit() const;
  std::optional<std::size_t> find(std::string_view label) const;
  // Throws kInvalidArgument for an unknown label.
  std::size_t index_of(std::string_view label) const;
  std::string to_string() const;

  friend bool operator==(const ClassicalObject&, const ClassicalObject&) = default;

 private:
  std::vector<std::string> labels_;
};

ClassicalObject tensor(const ClassicalObject& a, const ClassicalObject& b);

// A cod-by-dom matrix over a semiring.
class Morphism {
 public:
  Morphism(ClassicalObject dom, ClassicalObject cod, Matrix entries);

  const ClassicalObject& dom() const { return dom_; }
  const ClassicalObject& cod() const { return cod_; }
  const Matrix& matrix() const { return entries_; }
  const Semiring& semiring() const { return entries_.semiring(); }
  const Element& operator()(std::size_t row, std::size_t col) const {
    return entries_(row, col);
  }
  const Element& at(std::string_view cod_label, std::string_view dom_label) const;

  std::string to_string() const;

 private:
  ClassicalObject dom_;
  ClassicalObject cod_;
  Matrix entries_;
};

bool equal(const Morphism& f, const Morphism& g);

Morphism identity(const Semiring& s, const ClassicalObject& x);
Morphism zero(const Semiring& s, const ClassicalObject& dom,
              const ClassicalObject& cod);
// g after f.
Morphism compose(const Morphism& g, const Morphism& f);
Morphism tensor(const Morphism& f, const Morphism& g);
Morphism sum(const Morphism& f, const Morphism& g);
Morphism scale(const Element& s, const Morphism& f);
Morphism swap(const Semiring& s, const ClassicalObject& a,
              const ClassicalObject& b);

Morphism discard(const Semiring& s, const ClassicalObject& x);
// The deterministic state delta_x and the effect <x|.
Morphism point(const Semiring& s, const ClassicalObject& x,
               std::string_view label);
Morphism copoint(const Semiring& s, const ClassicalObject& x,
                 std::string_view label);
Morphism copy(const Semiring& s, const ClassicalObject& x);

// 0/1 matrix of a (possibly partial) function given as label -> label;
// labels of `dom` missing from `fn` are undefined.
Morphism deterministic_embed(const Semiring& s, const ClassicalObject& dom,
                             const ClassicalObject& cod,
                             const std::map<std::string, std::string>& fn);

// Every column sums to one.
bool is_normalised(const Morphism& f);

enum class Side { kLeft, kRight };

// Declares which tensor factor of an object is the classical one. With
// Side::kRight the object is rest (x) classical, otherwise classical (x) rest.
struct FactorSplit {
  ClassicalObject rest;
  ClassicalObject classical;
  Side side = Side::kRight;

  ClassicalObject joined() const;
};

// f_y = (id_K (x) <y|) o f for cod(f) = K (x) Y.
Morphism test_against(const Morphism& f, const FactorSplit& cod_split,
                      std::string_view y);
// (discard_H (x) <y|) o rho for a state rho on H (x) Y.
Element output_probability(const Morphism& rho, const FactorSplit& split,
                           std::string_view y);
// (1 / P(y)) rho_y; kConditioningUndefined when P(y) is not invertible.
Morphism condition(const Morphism& rho, const FactorSplit& split,
                   std::string_view y);
// f o (id_H (x) p) for dom(f) = H (x) X and a state p on X.
Morphism control_apply(const Morphism& f, const FactorSplit& dom_split,
                       const Morphism& p);
// (id_K (x) q) o f for cod(f) = K (x) X and a total function q : X -> Z.
Morphism coarse_grain(const Morphism& f, const FactorSplit& cod_split,
                      const ClassicalObject& z,
                      const std::map<std::string, std::string>& q);
// (f (x) id_X) o copy_X o q for a normalised controlled preparation
// f : X -> H and a normalised state q on X.
Morphism preparation_test_from_controlled(const Morphism& f, const Morphism& q);

}  // namespace catprob::matcat
