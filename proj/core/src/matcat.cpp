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

#include "catprob/matcat.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "catprob/error.hpp"

namespace catprob::matcat {

namespace {

constexpr std::string_view kUnitLabel = "*";

void require_semiring(const Morphism& f, const Morphism& g) {
  if (!(f.semiring() == g.semiring())) {
    fail(ErrorCode::kSemiringMismatch,
         f.semiring().id() + " vs " + g.semiring().id());
  }
}

void require_split(const ClassicalObject& object, const FactorSplit& split,
                   const char* what) {
  if (!(split.joined() == object)) {
    fail(ErrorCode::kInvalidFactorSplit,
         std::string(what) + " " + object.to_string() + " is not " +
             split.joined().to_string());
  }
}

// Index of (rest r, classical x) inside the joined object.
std::size_t joined_index(const FactorSplit& split, std::size_t r,
                         std::size_t x) {
  return split.side == Side::kRight ? r * split.classical.size() + x
                                    : x * split.rest.size() + r;
}

}  // namespace

ClassicalObject::ClassicalObject(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) {
    fail(ErrorCode::kInvalidArgument, "classical objects must be nonempty");
  }
  std::set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) fail(ErrorCode::kInvalidArgument, "empty label");
    if (!seen.insert(l).second) {
      fail(ErrorCode::kInvalidArgument, "duplicate label '" + l + "'");
    }
  }
  if (labels_.size() > 1 && seen.count(kUnitLabel)) {
    fail(ErrorCode::kInvalidArgument, "label '*' is reserved for the unit");
  }
}

ClassicalObject ClassicalObject::unit() {
  return ClassicalObject({std::string(kUnitLabel)});
}

ClassicalObject ClassicalObject::range(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return ClassicalObject(std::move(labels));
}

bool ClassicalObject::is_unit() const {
  return labels_.size() == 1 && labels_[0] == kUnitLabel;
}

std::optional<std::size_t> ClassicalObject::find(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t ClassicalObject::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  fail(ErrorCode::kInvalidArgument,
       "label '" + std::string(label) + "' not in " + to_string());
}

std::string ClassicalObject::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    out += (i ? " " : "") + labels_[i];
  }
  return out + "}";
}

ClassicalObject tensor(const ClassicalObject& a, const ClassicalObject& b) {
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  std::vector<std::string> labels;
  labels.reserve(a.size() * b.size());
  for (const auto& x : a.labels()) {
    for (const auto& y : b.labels()) labels.push_back(x + "," + y);
  }
  return ClassicalObject(std::move(labels));
}

Morphism::Morphism(ClassicalObject dom, ClassicalObject cod, Matrix entries)
    : dom_(std::move(dom)), cod_(std::move(cod)), entries_(std::move(entries)) {
  if (entries_.rows() != cod_.size() || entries_.cols() != dom_.size()) {
    fail(ErrorCode::kShapeMismatch,
         "matrix is " + std::to_string(entries_.rows()) + "x" +
             std::to_string(entries_.cols()) + " but objects need " +
             std::to_string(cod_.size()) + "x" + std::to_string(dom_.size()));
  }
}

const Element& Morphism::at(std::string_view cod_label,
                            std::string_view dom_label) const {
  return entries_(cod_.index_of(cod_label), dom_.index_of(dom_label));
}

std::string Morphism::to_string() const {
  return dom_.to_string() + " -> " + cod_.to_string() + " " +
         entries_.to_string();
}

bool equal(const Morphism& f, const Morphism& g) {
  return f.dom() == g.dom() && f.cod() == g.cod() &&
         catprob::equal(f.matrix(), g.matrix());
}

Morphism identity(const Semiring& s, const ClassicalObject& x) {
  return Morphism(x, x, Matrix::identity(s, x.size()));
}

Morphism zero(const Semiring& s, const ClassicalObject& dom,
              const ClassicalObject& cod) {
  return Morphism(dom, cod, Matrix(s, cod.size(), dom.size()));
}

Morphism compose(const Morphism& g, const Morphism& f) {
  require_semiring(f, g);
  if (!(f.cod() == g.dom())) {
    fail(ErrorCode::kShapeMismatch, "codomain " + f.cod().to_string() +
                                        " does not match domain " +
                                        g.dom().to_string());
  }
  return Morphism(f.dom(), g.cod(), multiply(g.matrix(), f.matrix()));
}

Morphism tensor(const Morphism& f, const Morphism& g) {
  require_semiring(f, g);
  return Morphism(tensor(f.dom(), g.dom()), tensor(f.cod(), g.cod()),
                  kron(f.matrix(), g.matrix()));
}

Morphism sum(const Morphism& f, const Morphism& g) {
  require_semiring(f, g);
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) {
    fail(ErrorCode::kShapeMismatch, "summands have different types");
  }
  return Morphism(f.dom(), f.cod(), add(f.matrix(), g.matrix()));
}

Morphism scale(const Element& s, const Morphism& f) {
  return Morphism(f.dom(), f.cod(), catprob::scale(s, f.matrix()));
}

Morphism swap(const Semiring& s, const ClassicalObject& a,
              const ClassicalObject& b) {
  Matrix m(s, a.size() * b.size(), a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      m.set(j * a.size() + i, i * b.size() + j, s.one());
    }
  }
  return Morphism(tensor(a, b), tensor(b, a), std::move(m));
}

Morphism discard(const Semiring& s, const ClassicalObject& x) {
  Matrix m(s, 1, x.size());
  for (std::size_t i = 0; i < x.size(); ++i) m.set(0, i, s.one());
  return Morphism(x, ClassicalObject::unit(), std::move(m));
}

Morphism point(const Semiring& s, const ClassicalObject& x,
               std::string_view label) {
  Matrix m(s, x.size(), 1);
  m.set(x.index_of(label), 0, s.one());
  return Morphism(ClassicalObject::unit(), x, std::move(m));
}

Morphism copoint(const Semiring& s, const ClassicalObject& x,
                 std::string_view label) {
  Matrix m(s, 1, x.size());
  m.set(0, x.index_of(label), s.one());
  return Morphism(x, ClassicalObject::unit(), std::move(m));
}

Morphism copy(const Semiring& s, const ClassicalObject& x) {
  const std::size_t n = x.size();
  Matrix m(s, n * n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i * n + i, i, s.one());
  return Morphism(x, tensor(x, x), std::move(m));
}

Morphism deterministic_embed(const Semiring& s, const ClassicalObject& dom,
                             const ClassicalObject& cod,
                             const std::map<std::string, std::string>& fn) {
  Matrix m(s, cod.size(), dom.size());
  for (const auto& [from, to] : fn) {
    const auto col = dom.find(from);
    if (!col) {
      fail(ErrorCode::kInvalidArgument,
           "function argument '" + from + "' is not in " + dom.to_string());
    }
    const auto row = cod.find(to);
    if (!row) {
      fail(ErrorCode::kInvalidArgument,
           "function value '" + to + "' is not in " + cod.to_string());
    }
    m.set(*row, *col, s.one());
  }
  return Morphism(dom, cod, std::move(m));
}

bool is_normalised(const Morphism& f) {
  const Semiring& s = f.semiring();
  for (const Element& c : column_sums(f.matrix())) {
    if (!s.equal(c, s.one())) return false;
  }
  return true;
}

ClassicalObject FactorSplit::joined() const {
  return side == Side::kRight ? tensor(rest, classical) : tensor(classical, rest);
}

Morphism test_against(const Morphism& f, const FactorSplit& cod_split,
                      std::string_view y) {
  require_split(f.cod(), cod_split, "codomain");
  const std::size_t yi = cod_split.classical.index_of(y);
  Matrix m(f.semiring(), cod_split.rest.size(), f.dom().size());
  for (std::size_t k = 0; k < cod_split.rest.size(); ++k) {
    for (std::size_t c = 0; c < f.dom().size(); ++c) {
      m.set(k, c, f(joined_index(cod_split, k, yi), c));
    }
  }
  return Morphism(f.dom(), cod_split.rest, std::move(m));
}

Element output_probability(const Morphism& rho, const FactorSplit& split,
                           std::string_view y) {
  if (!rho.dom().is_unit()) {
    fail(ErrorCode::kShapeMismatch, "output probability needs a state");
  }
  const Morphism branch = test_against(rho, split, y);
  return column_sums(branch.matrix())[0];
}

Morphism condition(const Morphism& rho, const FactorSplit& split,
                   std::string_view y) {
  const Element p = output_probability(rho, split, y);
  const Semiring& s = rho.semiring();
  if (!s.is_invertible(p)) {
    fail(ErrorCode::kConditioningUndefined,
         "P(" + std::string(y) + ") = " + s.format(p) +
             " is not invertible in " + s.id());
  }
  return scale(s.inverse(p), test_against(rho, split, y));
}

Morphism control_apply(const Morphism& f, const FactorSplit& dom_split,
                       const Morphism& p) {
  require_semiring(f, p);
  require_split(f.dom(), dom_split, "domain");
  if (!p.dom().is_unit() || !(p.cod() == dom_split.classical)) {
    fail(ErrorCode::kShapeMismatch,
         "control input must be a state on " + dom_split.classical.to_string());
  }
  const Semiring& s = f.semiring();
  const ClassicalObject& h = dom_split.rest;
  Matrix m(s, f.cod().size(), h.size());
  for (std::size_t r = 0; r < f.cod().size(); ++r) {
    for (std::size_t i = 0; i < h.size(); ++i) {
      for (std::size_t x = 0; x < dom_split.classical.size(); ++x) {
        m.add_to(r, i, s.mul(f(r, joined_index(dom_split, i, x)), p(x, 0)));
      }
    }
  }
  return Morphism(h, f.cod(), std::move(m));
}

Morphism coarse_grain(const Morphism& f, const FactorSplit& cod_split,
                      const ClassicalObject& z,
                      const std::map<std::string, std::string>& q) {
  require_split(f.cod(), cod_split, "codomain");
  for (const auto& x : cod_split.classical.labels()) {
    if (!q.count(x)) {
      fail(ErrorCode::kInvalidArgument,
           "coarse-graining function is undefined on '" + x + "'");
    }
  }
  const Semiring& s = f.semiring();
  const Morphism qm = deterministic_embed(s, cod_split.classical, z, q);
  const Morphism post = cod_split.side == Side::kRight
                            ? tensor(identity(s, cod_split.rest), qm)
                            : tensor(qm, identity(s, cod_split.rest));
  return compose(post, f);
}

Morphism preparation_test_from_controlled(const Morphism& f,
                                          const Morphism& q) {
  require_semiring(f, q);
  if (!is_normalised(f)) {
    fail(ErrorCode::kNotNormalised, "controlled preparation is not normalised");
  }
  if (!q.dom().is_unit() || !is_normalised(q)) {
    fail(ErrorCode::kNotNormalised, "q must be a normalised state");
  }
  const Semiring& s = f.semiring();
  const ClassicalObject& x = f.dom();
  return compose(tensor(f, identity(s, x)), compose(copy(s, x), q));
}

}  // namespace catprob::matcat
