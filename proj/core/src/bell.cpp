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

#include "catprob/bell.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace catprob::bell {

namespace {

constexpr std::string_view kMachineHeader = "catprob-empirical-model 1";

bool has_numeric_view(const Semiring& s) {
  switch (s.kind()) {
    case SemiringKind::kBool:
    case SemiringKind::kNat:
    case SemiringKind::kRatNonNeg:
    case SemiringKind::kRat:
    case SemiringKind::kGaussRat:
    case SemiringKind::kComplexF64:
      return true;
    default:
      return false;
  }
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::size_t> unrank(std::size_t index,
                                const std::vector<matcat::ClassicalObject>& objs) {
  std::vector<std::size_t> digits(objs.size());
  for (std::size_t j = objs.size(); j-- > 0;) {
    digits[j] = index % objs[j].size();
    index /= objs[j].size();
  }
  return digits;
}

std::size_t rank_of(const std::vector<std::size_t>& digits,
                    const std::vector<matcat::ClassicalObject>& objs) {
  if (digits.size() != objs.size()) {
    fail(ErrorCode::kShapeMismatch, "expected " + std::to_string(objs.size()) +
                                        " indices, got " +
                                        std::to_string(digits.size()));
  }
  std::size_t index = 0;
  for (std::size_t j = 0; j < objs.size(); ++j) {
    if (digits[j] >= objs[j].size()) {
      fail(ErrorCode::kInvalidArgument, "index out of range");
    }
    index = index * objs[j].size() + digits[j];
  }
  return index;
}

std::size_t product_size(const std::vector<matcat::ClassicalObject>& objs) {
  std::size_t n = 1;
  for (const auto& o : objs) n *= o.size();
  return n;
}

std::string label_of(const std::vector<std::size_t>& digits,
                     const std::vector<matcat::ClassicalObject>& objs) {
  std::vector<std::string> parts;
  for (std::size_t j = 0; j < digits.size(); ++j) {
    parts.push_back(objs[j].labels()[digits[j]]);
  }
  return join(parts, ",");
}

// Marginal of one row with party j's outcome summed out, indexed row-major
// over the remaining parties.
std::vector<Element> marginal(const EmpiricalModel& e,
                              const std::vector<Element>& row, std::size_t j) {
  const Semiring& s = e.semiring;
  const std::size_t oj = e.outcomes[j].size();
  std::vector<Element> out(row.size() / oj, s.zero());
  for (std::size_t o = 0; o < row.size(); ++o) {
    auto digits = e.joint_outcome(o);
    digits.erase(digits.begin() + static_cast<std::ptrdiff_t>(j));
    std::size_t index = 0;
    for (std::size_t k = 0, d = 0; k < e.outcomes.size(); ++k) {
      if (k == j) continue;
      index = index * e.outcomes[k].size() + digits[d++];
    }
    out[index] = s.add(out[index], row[o]);
  }
  return out;
}

std::vector<std::string> tokens(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

}  // namespace

std::size_t EmpiricalModel::num_contexts() const { return product_size(choices); }

std::size_t EmpiricalModel::num_joint_outcomes() const {
  return product_size(outcomes);
}

std::vector<std::size_t> EmpiricalModel::context(std::size_t index) const {
  return unrank(index, choices);
}

std::size_t EmpiricalModel::context_index(
    const std::vector<std::size_t>& choice) const {
  return rank_of(choice, choices);
}

std::vector<std::size_t> EmpiricalModel::joint_outcome(std::size_t index) const {
  return unrank(index, outcomes);
}

std::string EmpiricalModel::context_label(std::size_t index) const {
  return label_of(context(index), choices);
}

std::string EmpiricalModel::outcome_label(std::size_t index) const {
  return label_of(joint_outcome(index), outcomes);
}

const Element& EmpiricalModel::probability(
    const std::vector<std::string>& choice,
    const std::vector<std::string>& outcome) const {
  if (choice.size() != choices.size() || outcome.size() != outcomes.size()) {
    fail(ErrorCode::kShapeMismatch, "one label per party expected");
  }
  std::vector<std::size_t> m, o;
  for (std::size_t j = 0; j < choices.size(); ++j) {
    m.push_back(choices[j].index_of(choice[j]));
    o.push_back(outcomes[j].index_of(outcome[j]));
  }
  return table.at(rank_of(m, choices)).at(rank_of(o, outcomes));
}

void check_shape(const EmpiricalModel& e) {
  if (e.parties.empty()) fail(ErrorCode::kShapeMismatch, "model has no parties");
  if (e.choices.size() != e.parties.size() ||
      e.outcomes.size() != e.parties.size()) {
    fail(ErrorCode::kShapeMismatch, "one choice and outcome set per party");
  }
  if (e.table.size() != e.num_contexts()) {
    fail(ErrorCode::kShapeMismatch,
         "expected " + std::to_string(e.num_contexts()) + " contexts, got " +
             std::to_string(e.table.size()));
  }
  for (std::size_t c = 0; c < e.table.size(); ++c) {
    if (e.table[c].size() != e.num_joint_outcomes()) {
      fail(ErrorCode::kShapeMismatch,
           "context " + e.context_label(c) + " has " +
               std::to_string(e.table[c].size()) + " entries, expected " +
               std::to_string(e.num_joint_outcomes()));
    }
    for (const Element& x : e.table[c]) {
      if (!e.semiring.contains(x)) {
        fail(ErrorCode::kSemiringMismatch,
             "entry of context " + e.context_label(c) + " is not in " +
                 e.semiring.id());
      }
    }
  }
}

NormalisationReport check_rows_normalised(const EmpiricalModel& e) {
  check_shape(e);
  const Semiring& s = e.semiring;
  NormalisationReport report;
  for (std::size_t c = 0; c < e.table.size(); ++c) {
    Element total = s.zero();
    for (const Element& x : e.table[c]) total = s.add(total, x);
    if (!s.equal(total, s.one())) {
      report.ok = false;
      report.witness_context = c;
      report.witness_sum = s.format(total);
      return report;
    }
  }
  return report;
}

NoSignallingReport no_signalling_check(const EmpiricalModel& e) {
  check_shape(e);
  const Semiring& s = e.semiring;
  const bool numeric = has_numeric_view(s);
  NoSignallingReport report;
  if (numeric) report.max_discrepancy = 0.0;
  for (std::size_t j = 0; j < e.parties.size(); ++j) {
    for (std::size_t c = 0; c < e.num_contexts(); ++c) {
      auto choice = e.context(c);
      if (choice[j] != 0) continue;
      const auto base = marginal(e, e.table[c], j);
      for (std::size_t m = 1; m < e.choices[j].size(); ++m) {
        choice[j] = m;
        const std::size_t other = e.context_index(choice);
        const auto alt = marginal(e, e.table[other], j);
        for (std::size_t i = 0; i < base.size(); ++i) {
          if (numeric) {
            const double d = std::abs(s.to_complex(base[i]) - s.to_complex(alt[i]));
            report.max_discrepancy = std::max(*report.max_discrepancy, d);
          }
          if (report.ok && !s.equal(base[i], alt[i])) {
            report.ok = false;
            report.party = j;
            report.context_a = c;
            report.context_b = other;
            report.marginal_index = i;
            report.witness = "party " + e.parties[j] + " signals: contexts " +
                             e.context_label(c) + " and " +
                             e.context_label(other) +
                             " give marginal entries " + s.format(base[i]) +
                             " and " + s.format(alt[i]);
          }
        }
      }
    }
  }
  return report;
}

std::string export_empirical_model(const EmpiricalModel& e,
                                   std::string_view format) {
  check_shape(e);
  const Semiring& s = e.semiring;
  std::ostringstream out;
  if (format == "machine") {
    out << kMachineHeader << "\n";
    out << "semiring " << s.id() << "\n";
    for (std::size_t j = 0; j < e.parties.size(); ++j) {
      out << "party " << e.parties[j] << " choices "
          << join(e.choices[j].labels(), " ") << " outcomes "
          << join(e.outcomes[j].labels(), " ") << "\n";
    }
    for (std::size_t c = 0; c < e.table.size(); ++c) {
      out << "row " << e.context_label(c);
      for (const Element& x : e.table[c]) out << " " << s.format(x);
      out << "\n";
    }
    return out.str();
  }
  if (format != "table") {
    fail(ErrorCode::kInvalidArgument,
         "unknown format '" + std::string(format) + "' (use table or machine)");
  }
  std::vector<std::vector<std::string>> cells;
  cells.push_back({join(e.parties, ",")});
  for (std::size_t o = 0; o < e.num_joint_outcomes(); ++o) {
    cells.front().push_back(e.outcome_label(o));
  }
  for (std::size_t c = 0; c < e.table.size(); ++c) {
    std::vector<std::string> row{e.context_label(c)};
    for (const Element& x : e.table[c]) row.push_back(s.format(x));
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  out << "empirical model over " << s.id() << "\n";
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) {
        line += std::string(width[i] - row[i].size() + (i == 0 ? 3 : 2), ' ');
        if (i == 0) line[line.size() - 2] = '|';
      }
    }
    out << line << "\n";
  }
  return out.str();
}

EmpiricalModel parse_empirical_model(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto error = [&](const std::string& what) {
    fail(ErrorCode::kSyntax, "line " + std::to_string(line_no) + ": " + what);
  };
  if (!std::getline(in, line) || line != kMachineHeader) {
    line_no = 1;
    error("expected '" + std::string(kMachineHeader) + "'");
  }
  line_no = 1;
  std::optional<Semiring> semiring;
  EmpiricalModel e{Semiring::boolean(), {}, {}, {}, {}};
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = tokens(line);
    if (t.empty()) continue;
    if (t[0] == "semiring") {
      if (t.size() < 2) error("missing semiring id");
      semiring = Semiring::from_id(line.substr(line.find("semiring") + 9));
      e.semiring = *semiring;
    } else if (t[0] == "party") {
      auto choices_at = std::find(t.begin(), t.end(), "choices");
      auto outcomes_at = std::find(t.begin(), t.end(), "outcomes");
      if (t.size() < 2 || choices_at != t.begin() + 2 || outcomes_at == t.end() ||
          outcomes_at < choices_at) {
        error("expected 'party NAME choices ... outcomes ...'");
      }
      e.parties.push_back(t[1]);
      e.choices.emplace_back(std::vector<std::string>(choices_at + 1, outcomes_at));
      e.outcomes.emplace_back(std::vector<std::string>(outcomes_at + 1, t.end()));
    } else if (t[0] == "row") {
      if (!semiring) error("row before semiring");
      if (t.size() < 2) error("missing context label");
      const std::size_t c = e.table.size();
      if (c >= e.num_contexts() || t[1] != e.context_label(c)) {
        error("unexpected context '" + t[1] + "'");
      }
      std::vector<Element> row;
      for (std::size_t i = 2; i < t.size(); ++i) row.push_back(semiring->parse(t[i]));
      e.table.push_back(std::move(row));
    } else {
      error("unknown directive '" + t[0] + "'");
    }
  }
  if (!semiring) error("missing semiring");
  check_shape(e);
  return e;
}

}  // namespace catprob::bell
