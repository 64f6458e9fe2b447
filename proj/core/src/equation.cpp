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

#include "catprob/equation.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "catprob/toy_theory.hpp"

namespace catprob::diagram {

namespace {

std::string matrix_difference(const Matrix& lhs, const Matrix& rhs) {
  const auto at = first_difference(lhs, rhs);
  if (!at) return "";
  const auto [r, c] = *at;
  if (r >= lhs.rows() || c >= lhs.cols() || r >= rhs.rows() || c >= rhs.cols()) {
    return "shapes differ: " + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) +
           " vs " + std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols());
  }
  return "entry (" + std::to_string(r) + ", " + std::to_string(c) + "): lhs " +
         lhs.semiring().format(lhs(r, c)) + ", rhs " + rhs.semiring().format(rhs(r, c));
}

template <TheoryBackend B>
EquationRun run_equation(const B& b, const Program& p, const Declarations& d, const Node& lhs,
                         const Node& rhs, std::size_t trials, std::uint64_t seed) {
  EquationRun run{b.name(), 0, std::nullopt};
  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(seed + t);
    const auto g = bind(b, p, d, rng);
    const auto l = evaluate(b, lhs, d, g);
    const auto r = evaluate(b, rhs, d, g);
    ++run.trials;
    if (!b.equal(l, r)) {
      run.difference = "trial " + std::to_string(t) + ": " +
                       matrix_difference(b.matrix(l), b.matrix(r));
      break;
    }
  }
  return run;
}

Node typed_term(const Program& p, const Declarations& d, const char* side) {
  if (!p.term) fail(ErrorCode::kSyntax, std::string(side) + " has no diagram");
  return typecheck(*p.term, d);
}

}  // namespace

std::string backend_name(const AnyBackend& b) {
  return std::visit([](const auto& x) { return std::string(x.name()); }, b);
}

std::vector<AnyBackend> backends_of(const Program& p, const std::vector<std::string>& semirings) {
  std::vector<AnyBackend> out;
  const bool quantum = p.backend && *p.backend == "quantum";
  for (const auto& id : semirings.empty() ? p.semirings : semirings) {
    const Semiring s = Semiring::from_id(id);
    if (quantum) {
      out.emplace_back(quantum::theory_for_semiring(s));
    } else {
      out.emplace_back(ClassicalBackend(s));
    }
  }
  for (const auto& name : p.theories) out.emplace_back(quantum::toy_theory(name));
  if (out.empty()) fail(ErrorCode::kInvalidArgument, "no semiring or theory given");
  return out;
}

bool EquationReport::ok() const {
  if (runs.empty()) return false;
  for (const auto& r : runs) {
    if (!r.equal()) return false;
  }
  return true;
}

EquationReport check_equation(std::string_view lhs, std::string_view rhs,
                              std::string_view bindings, std::size_t trials,
                              std::uint64_t seed, const std::vector<std::string>& semirings) {
  if (trials == 0) fail(ErrorCode::kInvalidArgument, "need at least one trial");
  const Program base = parse(bindings);
  if (base.term) fail(ErrorCode::kSyntax, "the bindings file must not contain a diagram");
  const Program left = merge(base, parse(lhs));
  const Program right = parse(rhs);
  // Declarations made in either side are visible to both.
  Program all = merge(left, right);
  all.term = std::nullopt;
  const Declarations d = declarations(all);
  const Node l = typed_term(left, d, "lhs");
  const Node r = typed_term(right, d, "rhs");
  if (l.dom != r.dom || l.cod != r.cod) {
    fail(ErrorCode::kType, "sides have different types: " + format_wires(l.dom) + " -> " +
                               format_wires(l.cod) + " vs " + format_wires(r.dom) + " -> " +
                               format_wires(r.cod));
  }
  EquationReport report;
  report.type = format_wires(l.dom) + " -> " + format_wires(l.cod);
  for (const AnyBackend& backend : backends_of(all, semirings)) {
    report.runs.push_back(std::visit(
        [&](const auto& b) { return run_equation(b, all, d, l, r, trials, seed); }, backend));
  }
  return report;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

EquationReport check_equation_dir(const std::filesystem::path& dir, std::size_t trials,
                                  std::uint64_t seed) {
  return check_equation(read_file(dir / "lhs.diag"), read_file(dir / "rhs.diag"),
                        read_file(dir / "bindings.txt"), trials, seed);
}

std::vector<Evaluation> evaluate_document(std::string_view source, std::uint64_t seed,
                                          const std::vector<std::string>& semirings) {
  const Program p = parse(source);
  const Declarations d = declarations(p);
  const Node t = typed_term(p, d, "document");
  std::vector<Evaluation> out;
  for (const AnyBackend& backend : backends_of(p, semirings)) {
    out.push_back(std::visit(
        [&](const auto& b) {
          std::mt19937_64 rng(seed);
          const auto g = bind(b, p, d, rng);
          return Evaluation{b.name(), format_wires(t.dom) + " -> " + format_wires(t.cod),
                            b.matrix(evaluate(b, t, d, g))};
        },
        backend));
  }
  return out;
}

}  // namespace catprob::diagram
