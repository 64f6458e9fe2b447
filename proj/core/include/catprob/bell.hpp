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

// Bell-type measurement scenarios: N parties share a state on H_1 (x) ... (x)
// H_N, each applies a measurement B_j : M_j (x) H_j -> O_j fed by a classical
// choice, and the outcome distributions for every joint choice form an
// empirical model over the scalars R.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catprob/backend.hpp"
#include "catprob/error.hpp"
#include "catprob/matcat.hpp"

namespace catprob::bell {

template <TheoryBackend B>
struct Party {
  std::string name;
  matcat::ClassicalObject choices;
  matcat::ClassicalObject outcomes;
  typename B::Object system;
  typename B::Arrow measurement;  // choices (x) system -> outcomes
};

template <TheoryBackend B>
struct Scenario {
  B backend;
  std::vector<Party<B>> parties;
  typename B::Arrow shared_state;  // unit -> system_1 (x) ... (x) system_N
};

// The outcome distribution for every joint choice. Contexts and joint
// outcomes are enumerated row-major with the first party most significant.
struct EmpiricalModel {
  Semiring semiring;
  std::vector<std::string> parties;
  std::vector<matcat::ClassicalObject> choices;
  std::vector<matcat::ClassicalObject> outcomes;
  std::vector<std::vector<Element>> table;  // [context][joint outcome]

  std::size_t num_contexts() const;
  std::size_t num_joint_outcomes() const;
  std::vector<std::size_t> context(std::size_t index) const;
  std::size_t context_index(const std::vector<std::size_t>& choice) const;
  std::vector<std::size_t> joint_outcome(std::size_t index) const;
  // Comma-joined labels, e.g. "0,1".
  std::string context_label(std::size_t index) const;
  std::string outcome_label(std::size_t index) const;
  // P(outcomes | choices) by label lists.
  const Element& probability(const std::vector<std::string>& choice,
                             const std::vector<std::string>& outcome) const;
};

// Checks sizes and that every entry lies in the semiring.
void check_shape(const EmpiricalModel& e);

struct NormalisationReport {
  bool ok = true;
  std::optional<std::size_t> witness_context;
  std::string witness_sum;
};

// Every row sums to one in R (within tolerance in approximate mode).
NormalisationReport check_rows_normalised(const EmpiricalModel& e);

struct NoSignallingReport {
  bool ok = true;
  // Present on failure: the party whose choice leaks, the two contexts that
  // differ only at that party, and the joint outcome of the other parties at
  // which the marginals differ.
  std::optional<std::size_t> party;
  std::size_t context_a = 0;
  std::size_t context_b = 0;
  std::size_t marginal_index = 0;
  std::string witness;
  // Largest |difference| of compared marginal entries; only computed for
  // semirings with a numeric view.
  std::optional<double> max_discrepancy;
};

// For every party j and every two contexts differing only at j, the marginals
// of the other parties' outcomes (O_j discarded) coincide.
NoSignallingReport no_signalling_check(const EmpiricalModel& e);

// "table": contexts as rows, joint outcomes as columns. "machine": a
// line-oriented header with the party, choice and outcome lists and the
// semiring id, followed by one line per context. Other names throw
// kInvalidArgument.
std::string export_empirical_model(const EmpiricalModel& e,
                                   std::string_view format);
// Reads the machine format back.
EmpiricalModel parse_empirical_model(std::string_view text);

// Itemised problems with a scenario; empty when it is valid.
template <TheoryBackend B>
std::vector<std::string> scenario_problems(const Scenario<B>& s) {
  const B& b = s.backend;
  std::vector<std::string> problems;
  if (s.parties.empty()) problems.push_back("scenario has no parties");
  typename B::Object joint = b.unit();
  for (const auto& p : s.parties) {
    joint = b.tensor(joint, p.system);
    const auto dom = b.tensor(b.classical(p.choices), p.system);
    const std::string who = "party " + p.name + ": ";
    if (!b.same_object(b.dom(p.measurement), dom)) {
      problems.push_back(who + "measurement domain is " +
                         b.describe(b.dom(p.measurement)) + ", expected " +
                         b.describe(dom));
      continue;
    }
    if (!b.same_object(b.cod(p.measurement), b.classical(p.outcomes))) {
      problems.push_back(who + "measurement codomain is " +
                         b.describe(b.cod(p.measurement)) + ", expected " +
                         b.describe(b.classical(p.outcomes)));
      continue;
    }
    if (!b.is_normalised(p.measurement)) {
      problems.push_back(who + "measurement is not normalised");
    }
  }
  if (!b.same_object(b.dom(s.shared_state), b.unit()) ||
      !b.same_object(b.cod(s.shared_state), joint)) {
    problems.push_back("shared state has type " + b.describe(b.dom(s.shared_state)) +
                       " -> " + b.describe(b.cod(s.shared_state)) + ", expected " +
                       b.describe(b.unit()) + " -> " + b.describe(joint));
  } else if (!b.is_normalised(s.shared_state)) {
    problems.push_back("shared state is not normalised");
  }
  return problems;
}

// Throws kInvalidScenario listing every problem.
template <TheoryBackend B>
void validate_scenario(const Scenario<B>& s) {
  const auto problems = scenario_problems(s);
  if (problems.empty()) return;
  std::string message;
  for (const auto& p : problems) message += (message.empty() ? "" : "; ") + p;
  fail(ErrorCode::kInvalidScenario, message);
}

// B_j o (delta_m (x) id_H) : H_j -> O_j, the measurement with choice m fixed.
template <TheoryBackend B>
typename B::Arrow fix_choice(const B& b, const Party<B>& p, std::size_t m) {
  const auto delta = b.embed(
      matcat::point(b.scalars(), p.choices, p.choices.labels().at(m)));
  return b.compose(p.measurement, b.tensor(delta, b.identity(p.system)));
}

template <TheoryBackend B>
EmpiricalModel evaluate(const Scenario<B>& s) {
  validate_scenario(s);
  const B& b = s.backend;
  EmpiricalModel e{b.scalars(), {}, {}, {}, {}};
  std::vector<std::vector<typename B::Arrow>> fixed(s.parties.size());
  for (std::size_t j = 0; j < s.parties.size(); ++j) {
    const auto& p = s.parties[j];
    e.parties.push_back(p.name);
    e.choices.push_back(p.choices);
    e.outcomes.push_back(p.outcomes);
    for (std::size_t m = 0; m < p.choices.size(); ++m) {
      fixed[j].push_back(fix_choice(b, p, m));
    }
  }
  const std::size_t contexts = e.num_contexts();
  e.table.reserve(contexts);
  for (std::size_t c = 0; c < contexts; ++c) {
    const auto choice = e.context(c);
    typename B::Arrow joint = fixed[0][choice[0]];
    for (std::size_t j = 1; j < choice.size(); ++j) {
      joint = b.tensor(joint, fixed[j][choice[j]]);
    }
    const matcat::Morphism dist = b.extract(b.compose(joint, s.shared_state));
    std::vector<Element> row;
    row.reserve(dist.matrix().rows());
    for (std::size_t o = 0; o < dist.matrix().rows(); ++o) row.push_back(dist(o, 0));
    e.table.push_back(std::move(row));
  }
  return e;
}

// With f : H -> K (x) Y for classical Y and g : K -> L, compares
// (discard_L (x) id_Y) o (g (x) id_Y) o f with (discard_K (x) id_Y) o f.
// Equality for every normalised g is the statement that no outcome y can
// depend on what happens later to K.
template <TheoryBackend B>
bool no_signalling_from_future(const B& b, const typename B::Arrow& f,
                               const typename B::Object& k,
                               const matcat::ClassicalObject& y,
                               const typename B::Arrow& g) {
  const auto y_obj = b.classical(y);
  if (!b.same_object(b.cod(f), b.tensor(k, y_obj))) {
    fail(ErrorCode::kShapeMismatch, "codomain " + b.describe(b.cod(f)) +
                                        " is not " +
                                        b.describe(b.tensor(k, y_obj)));
  }
  if (!b.same_object(b.dom(g), k)) {
    fail(ErrorCode::kShapeMismatch, "later process starts at " +
                                        b.describe(b.dom(g)) + ", expected " +
                                        b.describe(k));
  }
  const auto id_y = b.identity(y_obj);
  const auto later = b.compose(
      b.tensor(b.discard(b.cod(g)), id_y),
      b.compose(b.tensor(g, id_y), f));
  const auto now = b.compose(b.tensor(b.discard(k), id_y), f);
  return b.equal(later, now);
}

}  // namespace catprob::bell
