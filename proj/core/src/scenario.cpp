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

#include "catprob/scenario.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "catprob/error.hpp"
#include "catprob/literal.hpp"
#include "catprob/toy_theory.hpp"

namespace catprob::bell {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

struct Response {
  std::size_t line;
  std::string choice;
  std::string outcome;
  std::string literal;
};

struct RawParty {
  std::size_t line = 0;
  std::string name;
  std::vector<std::string> choices;
  std::vector<std::string> outcomes;
  std::optional<std::size_t> dim;
  std::vector<std::string> labels;
  std::vector<Response> responses;  // kraus or effect lines
  std::optional<Line> measurement;
};

struct RawState {
  std::size_t line;
  std::string kind;
  std::string weight;
  std::string literal;
};

struct RawScenario {
  std::string backend = "quantum";
  std::optional<std::string> semiring;
  std::optional<std::string> theory;
  std::vector<RawParty> parties;
  std::vector<RawState> states;
};

[[noreturn]] void syntax(std::size_t line, const std::string& what) {
  fail(ErrorCode::kSyntax, "line " + std::to_string(line) + ": " + what);
}

// Comments removed, blank lines dropped, bracketed literals joined.
std::vector<Line> logical_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  int depth = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (depth == 0) {
      if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
      out.push_back({number, raw});
    } else {
      out.back().text += " " + raw;
    }
    for (char c : raw) {
      if (c == '[') ++depth;
      if (c == ']') --depth;
    }
    if (depth < 0) syntax(number, "unbalanced ']'");
  }
  if (depth != 0) syntax(out.empty() ? number : out.back().number, "unclosed '['");
  return out;
}

// Splits off `n` leading words; the remainder (trimmed) goes last.
std::vector<std::string> split_words(const Line& line, std::size_t n) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  const std::string& s = line.text;
  for (std::size_t i = 0; i < n; ++i) {
    pos = s.find_first_not_of(" \t\r", pos);
    if (pos == std::string::npos || s[pos] == '[') {
      syntax(line.number, "expected " + std::to_string(n) + " words before the literal");
    }
    const std::size_t end = s.find_first_of(" \t\r[", pos);
    out.push_back(s.substr(pos, end - pos));
    pos = end == std::string::npos ? s.size() : end;
  }
  const std::size_t first = s.find_first_not_of(" \t\r", pos);
  const std::size_t last = s.find_last_not_of(" \t\r");
  out.push_back(first == std::string::npos ? "" : s.substr(first, last - first + 1));
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

RawScenario read_raw(std::string_view text) {
  RawScenario raw;
  for (const Line& line : logical_lines(text)) {
    const auto head = split_words(line, 1);
    const std::string& key = head[0];
    const std::string& rest = head[1];
    auto need_party = [&]() -> RawParty& {
      if (raw.parties.empty()) syntax(line.number, "'" + key + "' outside a party");
      return raw.parties.back();
    };
    if (key == "backend") {
      if (rest != "quantum" && rest != "classical") {
        syntax(line.number, "backend must be quantum or classical");
      }
      raw.backend = rest;
    } else if (key == "semiring") {
      raw.semiring = rest;
    } else if (key == "theory") {
      raw.theory = rest;
    } else if (key == "party") {
      const auto w = words(rest);
      if (w.size() != 1) syntax(line.number, "expected 'party NAME'");
      RawParty p;
      p.line = line.number;
      p.name = w[0];
      raw.parties.push_back(std::move(p));
    } else if (key == "choices") {
      need_party().choices = words(rest);
    } else if (key == "outcomes") {
      need_party().outcomes = words(rest);
    } else if (key == "dim") {
      RawParty& p = need_party();
      const auto w = words(rest);
      if (w.size() != 1 || w[0].find_first_not_of("0123456789") != std::string::npos) {
        syntax(line.number, "expected 'dim N'");
      }
      p.dim = std::stoul(w[0]);
    } else if (key == "labels") {
      need_party().labels = words(rest);
    } else if (key == "kraus" || key == "effect") {
      RawParty& p = need_party();
      const auto w = split_words(line, 3);
      p.responses.push_back({line.number, w[1], w[2], w[3]});
      if (key == "kraus" && raw.backend != "quantum") {
        syntax(line.number, "kraus needs the quantum backend (use effect)");
      }
      if (key == "effect" && raw.backend != "classical") {
        syntax(line.number, "effect needs the classical backend (use kraus)");
      }
    } else if (key == "measurement") {
      need_party().measurement = Line{line.number, rest};
    } else if (key == "state") {
      const auto w = split_words(line, 2);
      if (w[1] == "kraus") {
        const auto k = split_words(line, 3);
        raw.states.push_back({line.number, "kraus", k[2], k[3]});
      } else if (w[1] == "density" || w[1] == "vector") {
        raw.states.push_back({line.number, w[1], "", w[2]});
      } else {
        syntax(line.number, "state must be kraus, density or vector");
      }
    } else {
      syntax(line.number, "unknown directive '" + key + "'");
    }
  }
  return raw;
}

Matrix literal_matrix(const Semiring& s, const std::string& text, std::size_t line,
                      bool flat_as_column) {
  try {
    return to_matrix(s, parse_matrix_literal(text), flat_as_column);
  } catch (const Error& e) {
    syntax(line, e.what());
  }
}

Element literal_element(const Semiring& s, const std::string& text, std::size_t line) {
  try {
    return s.parse(text);
  } catch (const Error& e) {
    syntax(line, e.what());
  }
}

void check_party_header(const RawParty& p, const std::string& backend) {
  if (p.choices.empty()) syntax(p.line, "party " + p.name + " has no choices");
  if (p.outcomes.empty()) syntax(p.line, "party " + p.name + " has no outcomes");
  if (p.dim.has_value() == !p.labels.empty()) {
    syntax(p.line, "party " + p.name + " needs exactly one of dim and labels");
  }
  if (p.measurement.has_value() && !p.responses.empty()) {
    syntax(p.line, "party " + p.name + " mixes measurement with " +
                       (backend == "quantum" ? "kraus" : "effect") + " lines");
  }
  if (!p.measurement.has_value() && p.responses.empty()) {
    syntax(p.line, "party " + p.name + " has no measurement");
  }
}

// Label sets from the file; kSyntax rather than kInvalidArgument on misuse.
matcat::ClassicalObject object_of(const std::vector<std::string>& labels,
                                  std::size_t line) {
  try {
    return matcat::ClassicalObject(labels);
  } catch (const Error& e) {
    syntax(line, e.what());
  }
}

Scenario<ClassicalBackend> build_classical(const RawScenario& raw) {
  if (raw.theory) syntax(1, "theory needs the quantum backend");
  if (!raw.semiring) syntax(1, "missing semiring");
  const ClassicalBackend b(Semiring::from_id(*raw.semiring));
  const Semiring& r = b.semiring();
  std::vector<Party<ClassicalBackend>> parties;
  matcat::ClassicalObject joint = matcat::ClassicalObject::unit();
  for (const RawParty& p : raw.parties) {
    check_party_header(p, raw.backend);
    const auto choices = object_of(p.choices, p.line);
    const auto outcomes = object_of(p.outcomes, p.line);
    const auto system = p.dim ? matcat::ClassicalObject::range(*p.dim)
                              : object_of(p.labels, p.line);
    const auto dom = matcat::tensor(choices, system);
    Matrix m(r, outcomes.size(), dom.size());
    if (p.measurement) {
      m = literal_matrix(r, p.measurement->text, p.measurement->number, false);
    } else {
      for (const Response& e : p.responses) {
        const auto row = literal_matrix(r, e.literal, e.line, false);
        if (row.rows() != 1 || row.cols() != system.size()) {
          syntax(e.line, "effect must be a row of length " +
                             std::to_string(system.size()));
        }
        const auto mi = choices.find(e.choice);
        const auto oi = outcomes.find(e.outcome);
        if (!mi || !oi) syntax(e.line, "unknown choice or outcome label");
        for (std::size_t h = 0; h < system.size(); ++h) {
          m.add_to(*oi, *mi * system.size() + h, row(0, h));
        }
      }
    }
    if (m.rows() != outcomes.size() || m.cols() != dom.size()) {
      syntax(p.line, "measurement of party " + p.name + " must be " +
                         std::to_string(outcomes.size()) + "x" +
                         std::to_string(dom.size()));
    }
    parties.push_back({p.name, choices, outcomes, system,
                       matcat::Morphism(dom, outcomes, std::move(m))});
    joint = matcat::tensor(joint, system);
  }
  if (raw.states.size() != 1 || raw.states.front().kind != "vector") {
    syntax(1, "classical scenarios need exactly one 'state vector'");
  }
  const RawState& st = raw.states.front();
  Matrix v = literal_matrix(r, st.literal, st.line, true);
  if (v.rows() != joint.size() || v.cols() != 1) {
    syntax(st.line, "state must be a vector of length " + std::to_string(joint.size()));
  }
  return {b, std::move(parties),
          matcat::Morphism(matcat::ClassicalObject::unit(), joint, std::move(v))};
}

Scenario<quantum::QuantumBackend> build_quantum(const RawScenario& raw) {
  using quantum::QSystem;
  using quantum::Superoperator;
  if (raw.theory && raw.semiring) syntax(1, "give either theory or semiring");
  if (!raw.theory && !raw.semiring) syntax(1, "missing semiring or theory");
  const quantum::QuantumBackend b = raw.theory
                                        ? quantum::toy_theory(*raw.theory)
                                        : quantum::theory_for_semiring(Semiring::from_id(*raw.semiring));
  const Semiring& s = b.semiring();
  std::vector<Party<quantum::QuantumBackend>> parties;
  QSystem joint;
  for (const RawParty& p : raw.parties) {
    check_party_header(p, raw.backend);
    const auto choices = object_of(p.choices, p.line);
    const auto outcomes = object_of(p.outcomes, p.line);
    const QSystem system = p.dim ? QSystem::quantum(*p.dim)
                                 : QSystem::classical(object_of(p.labels, p.line));
    const QSystem dom = quantum::tensor(QSystem::classical(choices), system);
    const QSystem cod = QSystem::classical(outcomes);
    const std::size_t dh = system.dim();
    if (p.measurement) {
      const Matrix m = literal_matrix(s, p.measurement->text, p.measurement->number, false);
      if (m.rows() != cod.doubled_dim() || m.cols() != dom.doubled_dim()) {
        syntax(p.measurement->number,
               "measurement of party " + p.name + " must be " +
                   std::to_string(cod.doubled_dim()) + "x" +
                   std::to_string(dom.doubled_dim()));
      }
      parties.push_back({p.name, choices, outcomes, system, Superoperator(dom, cod, m)});
    } else {
      quantum::KrausFamily k{dom, cod, {}};
      for (const Response& e : p.responses) {
        const Matrix rows = literal_matrix(s, e.literal, e.line, false);
        if (rows.cols() != dh) {
          syntax(e.line, "kraus rows must have length " + std::to_string(dh));
        }
        const auto mi = choices.find(e.choice);
        const auto oi = outcomes.find(e.outcome);
        if (!mi || !oi) syntax(e.line, "unknown choice or outcome label");
        for (std::size_t r = 0; r < rows.rows(); ++r) {
          Matrix l(s, cod.dim(), dom.dim());
          for (std::size_t h = 0; h < dh; ++h) l.set(*oi, *mi * dh + h, rows(r, h));
          k.elements.push_back(std::move(l));
        }
      }
      parties.push_back({p.name, choices, outcomes, system, quantum::cpm_from_kraus(k)});
    }
    joint = quantum::tensor(joint, system);
  }
  if (raw.states.empty()) syntax(1, "missing state");
  std::optional<Superoperator> state;
  for (const RawState& st : raw.states) {
    Superoperator term = quantum::zero(s, QSystem(), joint);
    if (st.kind == "kraus") {
      const Matrix v = literal_matrix(s, st.literal, st.line, true);
      if (v.rows() != joint.dim() || v.cols() != 1) {
        syntax(st.line, "state vector must have length " + std::to_string(joint.dim()));
      }
      term = b.scale(literal_element(b.scalars(), st.weight, st.line),
                     quantum::cpm_from_kraus({QSystem(), joint, {v}}));
    } else if (st.kind == "density") {
      const Matrix rho = literal_matrix(s, st.literal, st.line, false);
      const std::size_t d = joint.dim();
      if (rho.rows() != d || rho.cols() != d) {
        syntax(st.line, "density matrix must be " + std::to_string(d) + "x" +
                            std::to_string(d));
      }
      Matrix vec(s, d * d, 1);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) vec.set(i * d + j, 0, rho(i, j));
      }
      term = Superoperator(QSystem(), joint, std::move(vec));
    } else {
      syntax(st.line, "quantum scenarios take state kraus or state density");
    }
    state = state ? quantum::sum(*state, term) : term;
  }
  return {b, std::move(parties), *state};
}

}  // namespace

AnyScenario parse_scenario(std::string_view text) {
  const RawScenario raw = read_raw(text);
  if (raw.parties.empty()) syntax(1, "no parties");
  if (raw.backend == "classical") {
    auto s = build_classical(raw);
    validate_scenario(s);
    return s;
  }
  auto s = build_quantum(raw);
  validate_scenario(s);
  return s;
}

AnyScenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario(text.str());
}

}  // namespace catprob::bell
