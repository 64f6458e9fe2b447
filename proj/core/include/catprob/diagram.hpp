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

// A textual string-diagram language. A document is a list of declarations
// followed by an optional diagram term:
//
//   semiring <id>                      (repeatable; one run per semiring)
//   backend classical | quantum
//   theory <toy theory name>           (repeatable; quantum backend)
//   sys X classical 3 | sys X classical {a b c} | sys A quantum 2
//   gen f : X A -> Y = [[...]]         fixed matrix
//   gen f : X -> Y = random [normalised]
//   spo p m : X <-> A                  random sharp preparation/observation
//
//   term = seq {"+" seq}        seq = par {";" par}      par = atom {"*" atom}
//   atom = NAME | id[wires] | sw[w, w] | disc[wires] | state[w, label]
//        | effect[w, label] | copy[w] | scalar "." atom | "(" term ")"
//
// ";" composes left to right, "*" is the tensor product, "+" the sum. The
// unit wire list is written "I" or left empty. Scalars are numbers such as
// 2, 1/2 or 0.25, or any literal of the scalar semiring in braces, {-1/2}.
// Declarations end at the end of their line except for bracketed matrices.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "catprob/backend.hpp"
#include "catprob/error.hpp"
#include "catprob/literal.hpp"
#include "catprob/matcat.hpp"
#include "catprob/quantum.hpp"

namespace catprob::diagram {

struct Span {
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t end_line = 1;
  std::size_t end_col = 1;

  // "line:col-line:col"
  std::string to_string() const;
};

enum class NodeKind { kSeq, kPar, kSum, kScale, kGen, kId, kSwap, kDisc, kState, kEffect, kCopy };

struct Node {
  NodeKind kind = NodeKind::kId;
  Span span;
  std::string name;                // kGen
  std::vector<std::string> wires;  // kId, kDisc: any number; kSwap: two; others: one
  std::string label;               // kState, kEffect
  std::string scalar;              // kScale
  std::vector<Node> children;      // kSeq, kPar, kSum: two; kScale: one
  // Filled in by typecheck.
  std::vector<std::string> dom;
  std::vector<std::string> cod;
};

// Structural equality ignoring spans and types.
bool same_tree(const Node& a, const Node& b);

enum class WireKind { kClassical, kQuantum };

struct SysDecl {
  std::string name;
  WireKind kind = WireKind::kClassical;
  matcat::ClassicalObject basis = matcat::ClassicalObject::unit();
  Span span;
};

enum class GenSource { kMatrix, kRandom, kRandomNormalised };

struct GenDecl {
  std::string name;
  std::vector<std::string> dom;
  std::vector<std::string> cod;
  GenSource source = GenSource::kRandom;
  std::string matrix;  // literal text for kMatrix
  Span span;
};

struct SpoDecl {
  std::string prep;
  std::string obs;
  std::string classical;
  std::vector<std::string> system;
  Span span;
};

struct Program {
  std::vector<std::string> semirings;
  std::optional<std::string> backend;
  std::vector<std::string> theories;
  std::vector<SysDecl> systems;
  std::vector<GenDecl> gens;
  std::vector<SpoDecl> spos;
  std::optional<Node> term;
};

// Throws kSyntax with line and column.
Program parse(std::string_view source);
// Just a term, with no declarations.
Node parse_term(std::string_view source);

// Canonical text with the fewest parentheses; parse_term(pretty(t)) gives
// back t up to spans.
std::string pretty(const Node& term);

// Declarations of `extra` appended to `base`; the term comes from `extra`.
Program merge(const Program& base, const Program& extra);

// Systems and generator signatures by name.
struct Declarations {
  std::map<std::string, SysDecl> systems;
  std::map<std::string, GenDecl> gens;  // spo pairs appear as two entries
};

// kDuplicateDeclaration for a repeated name, kType for unknown systems in
// signatures.
Declarations declarations(const Program& p);

// Annotates every node with its domain and codomain. kType for ill-typed
// terms (with both types and the spans involved), kUnboundGenerator for
// undeclared generator names.
Node typecheck(const Node& term, const Declarations& d);

std::string format_wires(const std::vector<std::string>& wires);

// Backend-specific pieces of evaluation.
matcat::ClassicalObject wire_object(const ClassicalBackend& b, const SysDecl& s);
quantum::QSystem wire_object(const quantum::QuantumBackend& b, const SysDecl& s);
// The same matrix between objects of matching dimension; the quantum backend
// uses this to spread a single classical wire over several.
matcat::Morphism retype(const ClassicalBackend& b, const matcat::Morphism& f,
                        const matcat::ClassicalObject& dom,
                        const matcat::ClassicalObject& cod);
quantum::Superoperator retype(const quantum::QuantumBackend& b,
                              const quantum::Superoperator& f,
                              const quantum::QSystem& dom, const quantum::QSystem& cod);

matcat::ClassicalObject basis_of(const Declarations& d,
                                 const std::vector<std::string>& wires);

template <TheoryBackend B>
typename B::Object object_of(const B& b, const Declarations& d,
                             const std::vector<std::string>& wires) {
  typename B::Object out = b.unit();
  for (const auto& w : wires) out = b.tensor(out, wire_object(b, d.systems.at(w)));
  return out;
}

template <TheoryBackend B>
using Bindings = std::map<std::string, typename B::Arrow>;

bool all_classical(const Declarations& d, const std::vector<std::string>& wires);

// Builds every generator of `p`: fixed matrices as given (over classical
// wires, a matrix over the scalars; otherwise a pure map over S), random ones
// drawn from `rng`.
template <TheoryBackend B>
Bindings<B> bind(const B& b, const Program& p, const Declarations& d,
                 std::mt19937_64& rng) {
  Bindings<B> out;
  for (const GenDecl& g : p.gens) {
    const auto dom = object_of(b, d, g.dom);
    const auto cod = object_of(b, d, g.cod);
    if (g.source == GenSource::kMatrix) {
      const MatrixLiteral lit = parse_matrix_literal(g.matrix);
      if (all_classical(d, g.dom) && all_classical(d, g.cod)) {
        const matcat::Morphism m(basis_of(d, g.dom), basis_of(d, g.cod),
                                 to_matrix(b.scalars(), lit, false));
        out.insert_or_assign(g.name, retype(b, b.embed(m), dom, cod));
      } else {
        out.insert_or_assign(
            g.name, b.from_matrix(dom, cod, to_matrix(b.semiring(), lit, false), true));
      }
    } else {
      out.insert_or_assign(
          g.name, b.random_arrow(dom, cod, rng, g.source == GenSource::kRandomNormalised));
    }
  }
  for (const SpoDecl& s : p.spos) {
    auto [prep, obs] =
        b.random_spo(d.systems.at(s.classical).basis, object_of(b, d, s.system), rng);
    const auto x = object_of(b, d, {s.classical});
    const auto h = object_of(b, d, s.system);
    out.insert_or_assign(s.prep, retype(b, prep, x, h));
    out.insert_or_assign(s.obs, retype(b, obs, h, x));
  }
  return out;
}

// Structural evaluation of a typechecked term.
template <TheoryBackend B>
typename B::Arrow evaluate(const B& b, const Node& t, const Declarations& d,
                           const Bindings<B>& g) {
  const Semiring& r = b.scalars();
  auto classical_point = [&](bool state) {
    const auto& basis = d.systems.at(t.wires.at(0)).basis;
    if (!basis.find(t.label)) {
      fail(ErrorCode::kType, t.span.to_string() + ": '" + t.label +
                                 "' is not a label of " + t.wires[0]);
    }
    const auto x = object_of(b, d, t.wires);
    return state ? retype(b, b.embed(matcat::point(r, basis, t.label)), b.unit(), x)
                 : retype(b, b.embed(matcat::copoint(r, basis, t.label)), x, b.unit());
  };
  switch (t.kind) {
    case NodeKind::kSeq:
      return b.compose(evaluate(b, t.children[1], d, g), evaluate(b, t.children[0], d, g));
    case NodeKind::kPar:
      return b.tensor(evaluate(b, t.children[0], d, g), evaluate(b, t.children[1], d, g));
    case NodeKind::kSum:
      return b.sum(evaluate(b, t.children[0], d, g), evaluate(b, t.children[1], d, g));
    case NodeKind::kScale: {
      Element s;
      try {
        s = r.parse(t.scalar);
      } catch (const Error& e) {
        fail(e.code(), t.span.to_string() + ": " + e.what());
      }
      return b.scale(s, evaluate(b, t.children[0], d, g));
    }
    case NodeKind::kGen: {
      const auto it = g.find(t.name);
      if (it == g.end()) {
        fail(ErrorCode::kUnboundGenerator,
             t.span.to_string() + ": generator '" + t.name + "' has no binding");
      }
      return it->second;
    }
    case NodeKind::kId:
      return b.identity(object_of(b, d, t.wires));
    case NodeKind::kSwap:
      return b.swap(object_of(b, d, {t.wires[0]}), object_of(b, d, {t.wires[1]}));
    case NodeKind::kDisc:
      return b.discard(object_of(b, d, t.wires));
    case NodeKind::kState:
      return classical_point(true);
    case NodeKind::kEffect:
      return classical_point(false);
    case NodeKind::kCopy: {
      const auto& basis = d.systems.at(t.wires.at(0)).basis;
      return retype(b, b.embed(matcat::copy(r, basis)), object_of(b, d, t.wires),
                    object_of(b, d, {t.wires[0], t.wires[0]}));
    }
  }
  fail(ErrorCode::kInvalidArgument, "unknown node kind");
}

}  // namespace catprob::diagram
