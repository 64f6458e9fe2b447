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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <variant>

#include "catprob/bell.hpp"
#include "catprob/equation.hpp"
#include "catprob/error.hpp"
#include "catprob/scenario.hpp"
#include "catprob/self_test.hpp"
#include "catprob/semiring.hpp"
#include "catprob/toy_theory.hpp"

namespace catprob::cli {

namespace {

constexpr std::size_t kDefaultSelfTestTrials = 200;
constexpr std::size_t kDefaultEquationTrials = 20;

bool machine(const RunConfig& c) { return c.format == "machine"; }

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

// Semiring ids from --semiring with the tolerance attached to complex-f64.
std::vector<std::string> semiring_ids(const RunConfig& c) {
  std::vector<std::string> ids = c.semirings;
  if (c.tolerance) {
    bool approximate = false;
    for (auto& id : ids) {
      if (!Semiring::from_id(id).exact()) {
        id = "complex-f64 " + std::to_string(*c.tolerance);
        approximate = true;
      }
    }
    if (!approximate) {
      fail(ErrorCode::kInvalidArgument,
           "--tolerance needs an approximate semiring such as complex-f64 in --semiring");
    }
  }
  return ids;
}

void print_matrix(std::ostream& out, const Matrix& m, const std::string& indent) {
  const Semiring& s = m.semiring();
  std::vector<std::size_t> width(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      width[c] = std::max(width[c], s.format(m(r, c)).size());
    }
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << indent << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string e = s.format(m(r, c));
      out << (c ? "  " : "") << std::string(width[c] - e.size(), ' ') << e;
    }
    out << "]\n";
  }
}

// theory-check ----------------------------------------------------------

struct Target {
  std::string label;
  std::variant<ClassicalBackend, quantum::QuantumBackend> backend;
};

Target resolve_target(const RunConfig& c) {
  std::string name = join(c.inputs, " ");
  if (name.empty() && c.semirings.size() == 1) name = c.semirings[0];
  if (name.empty() || (!c.inputs.empty() && !c.semirings.empty())) {
    fail(ErrorCode::kInvalidArgument,
         "theory-check takes one semiring id or toy theory name");
  }
  std::optional<quantum::QuantumBackend> toy;
  try {
    toy = quantum::toy_theory(name);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInvalidArgument) throw;
  }
  if (toy) {
    if (c.tolerance) {
      if (toy->semiring().exact()) {
        fail(ErrorCode::kInvalidArgument, "--tolerance only applies to approximate theories");
      }
      const Semiring s = Semiring::complex_f64(*c.tolerance);
      toy.emplace(toy->name(), s, s);
    }
    return {"toy theory " + toy->name(), *toy};
  }
  Semiring s = Semiring::from_id(name);
  if (c.tolerance) {
    if (s.exact()) {
      fail(ErrorCode::kInvalidArgument, "--tolerance only applies to approximate semirings");
    }
    s = Semiring::complex_f64(*c.tolerance);
  }
  return {"classical " + s.id(), ClassicalBackend(s)};
}

int theory_check(const RunConfig& c, std::ostream& out) {
  const Target target = resolve_target(c);
  const int trials = static_cast<int>(c.trials.value_or(kDefaultSelfTestTrials));
  const SelfTestReport report = std::visit(
      [&](const auto& b) { return self_test(b, trials, c.seed); }, target.backend);
  const Semiring r =
      std::visit([](const auto& b) { return b.scalars(); }, target.backend);

  std::string positivity;
  std::string witness;
  try {
    const PositivityReport p = is_positive(r);
    positivity = p.positive ? "yes" : "no";
    std::vector<std::string> w;
    for (const auto& x : p.witness) w.push_back(r.format(x));
    witness = join(w, ", ");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kUnsupportedMode) throw;
    positivity = "n/a";
  }

  if (machine(c)) {
    out << "target " << target.label << "\n";
    out << "scalars " << r.id() << "\n";
    out << "seed " << c.seed << "\n";
    for (const auto& check : report.checks) {
      out << "check " << check.name << " | " << (check.passed() ? "pass" : "fail") << " | "
          << check.trials << " | " << check.failures << "\n";
    }
    out << "positive " << positivity << "\n";
    if (!witness.empty()) out << "positivity-witness " << witness << "\n";
    out << "result " << (report.ok() ? "pass" : "fail") << "\n";
  } else {
    out << "theory-check " << target.label << " (scalars " << r.id() << ", seed " << c.seed
        << ")\n";
    std::size_t width = 0;
    for (const auto& check : report.checks) width = std::max(width, check.name.size());
    for (const auto& check : report.checks) {
      out << "  " << check.name << std::string(width - check.name.size() + 2, ' ')
          << pass_fail(check.passed()) << "  " << (check.trials - check.failures) << "/"
          << check.trials;
      if (!check.passed()) out << "  first failure: " << check.witness;
      out << "\n";
    }
    out << "positive semiring: " << positivity;
    if (!witness.empty()) out << " (witness: " << witness << ")";
    if (positivity == "n/a") out << " (approximate mode)";
    out << "\n";
    out << "result: " << pass_fail(report.ok()) << "\n";
  }
  return report.ok() ? kExitPass : kExitCheckFailed;
}

// eval ------------------------------------------------------------------

int eval(const RunConfig& c, std::ostream& out) {
  if (c.inputs.size() != 1) fail(ErrorCode::kInvalidArgument, "eval takes one .diag file");
  const std::string source = diagram::read_file(c.inputs[0]);
  const auto results = diagram::evaluate_document(source, c.seed, semiring_ids(c));
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    if (machine(c)) {
      out << "backend " << r.backend << "\n";
      out << "type " << r.type << "\n";
      out << "shape " << r.matrix.rows() << " " << r.matrix.cols() << "\n";
      for (std::size_t row = 0; row < r.matrix.rows(); ++row) {
        out << "row " << row;
        for (std::size_t col = 0; col < r.matrix.cols(); ++col) {
          out << " " << r.matrix.semiring().format(r.matrix(row, col));
        }
        out << "\n";
      }
    } else {
      if (i) out << "\n";
      out << r.backend << ": " << r.type << "\n";
      print_matrix(out, r.matrix, "  ");
    }
  }
  return kExitPass;
}

// eq --------------------------------------------------------------------

int eq(const RunConfig& c, std::ostream& out) {
  std::string lhs, rhs, bindings;
  if (c.inputs.size() == 1) {
    const std::filesystem::path dir = c.inputs[0];
    lhs = diagram::read_file(dir / "lhs.diag");
    rhs = diagram::read_file(dir / "rhs.diag");
    bindings = diagram::read_file(dir / "bindings.txt");
  } else if (c.inputs.size() == 3) {
    lhs = diagram::read_file(c.inputs[0]);
    rhs = diagram::read_file(c.inputs[1]);
    bindings = diagram::read_file(c.inputs[2]);
  } else {
    fail(ErrorCode::kInvalidArgument,
         "eq takes <lhs.diag> <rhs.diag> <bindings> or one equation directory");
  }
  const std::size_t trials = c.trials.value_or(kDefaultEquationTrials);
  const auto report =
      diagram::check_equation(lhs, rhs, bindings, trials, c.seed, semiring_ids(c));
  if (machine(c)) {
    out << "type " << report.type << "\n";
    out << "seed " << c.seed << "\n";
    for (const auto& run : report.runs) {
      out << "run " << run.backend << " | " << (run.equal() ? "equal" : "unequal") << " | "
          << run.trials;
      if (run.difference) out << " | " << *run.difference;
      out << "\n";
    }
    out << "result " << (report.ok() ? "equal" : "unequal") << "\n";
  } else {
    out << "type: " << report.type << " (seed " << c.seed << ")\n";
    for (const auto& run : report.runs) {
      out << "  " << run.backend << ": ";
      if (run.equal()) {
        out << "equal (" << run.trials << " trials)\n";
      } else {
        out << "unequal, " << *run.difference << "\n";
      }
    }
    out << "result: " << (report.ok() ? "equal" : "unequal") << "\n";
  }
  return report.ok() ? kExitPass : kExitCheckFailed;
}

// bell ------------------------------------------------------------------

// Sum over x, y of (-1)^(xy) E(x, y), E the +/-1 correlator, for a model
// with two parties, two choices and two outcomes each. Exact when the
// probabilities are rational.
std::optional<std::string> chsh_value(const bell::EmpiricalModel& e) {
  if (e.parties.size() != 2) return std::nullopt;
  for (std::size_t j = 0; j < 2; ++j) {
    if (e.choices[j].size() != 2 || e.outcomes[j].size() != 2) return std::nullopt;
  }
  const SemiringKind kind = e.semiring.kind();
  auto sign = [](std::size_t x, std::size_t y, std::size_t o) {
    const std::size_t a = o / 2, b = o % 2;
    return ((x & y) ^ (a != b)) ? -1 : 1;
  };
  if (kind == SemiringKind::kRatNonNeg || kind == SemiringKind::kRat) {
    const Semiring q = Semiring::rat();
    Element total = q.zero();
    for (std::size_t ctx = 0; ctx < 4; ++ctx) {
      for (std::size_t o = 0; o < 4; ++o) {
        const Element p = *convert(e.table[ctx][o], e.semiring, q);
        total = sign(ctx / 2, ctx % 2, o) > 0 ? q.add(total, p) : q.subtract(total, p);
      }
    }
    return q.format(total);
  }
  if (kind == SemiringKind::kComplexF64) {
    double total = 0.0;
    for (std::size_t ctx = 0; ctx < 4; ++ctx) {
      for (std::size_t o = 0; o < 4; ++o) {
        total += sign(ctx / 2, ctx % 2, o) * e.semiring.to_complex(e.table[ctx][o]).real();
      }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", total);
    return std::string(buf);
  }
  return std::nullopt;
}

template <TheoryBackend B>
bell::EmpiricalModel evaluate_scenario(const bell::Scenario<B>& s) {
  bell::validate_scenario(s);
  return bell::evaluate(s);
}

int bell_command(const RunConfig& c, std::ostream& out) {
  if (c.inputs.size() != 1) fail(ErrorCode::kInvalidArgument, "bell takes one scenario file");
  if (!c.semirings.empty()) {
    fail(ErrorCode::kInvalidArgument, "the scenario file names its own semiring");
  }
  const auto scenario = bell::load_scenario(c.inputs[0]);
  bell::EmpiricalModel model =
      std::visit([](const auto& s) { return evaluate_scenario(s); }, scenario);
  if (c.tolerance) {
    if (model.semiring.exact()) {
      fail(ErrorCode::kInvalidArgument, "--tolerance only applies to approximate scenarios");
    }
    model.semiring = Semiring::complex_f64(*c.tolerance);
  }
  const auto rows = bell::check_rows_normalised(model);
  const auto ns = bell::no_signalling_check(model);
  const auto chsh = chsh_value(model);
  const bool ok = rows.ok && ns.ok;

  out << bell::export_empirical_model(model, c.format);
  if (machine(c)) {
    out << "rows-normalised " << (rows.ok ? "pass" : "fail") << "\n";
    out << "no-signalling " << (ns.ok ? "pass" : "fail") << "\n";
    if (ns.max_discrepancy) out << "max-discrepancy " << *ns.max_discrepancy << "\n";
    if (chsh) out << "chsh " << *chsh << "\n";
    out << "result " << (ok ? "pass" : "fail") << "\n";
    return ok ? kExitPass : kExitCheckFailed;
  }
  out << "\nrows normalised: " << pass_fail(rows.ok);
  if (!rows.ok) {
    out << " (row " << model.context_label(*rows.witness_context) << " sums to "
        << rows.witness_sum << ")";
  }
  out << "\nno-signalling: " << pass_fail(ns.ok);
  if (!ns.ok) {
    out << " (party " << model.parties[*ns.party] << ": " << ns.witness << ")";
  }
  out << "\n";
  if (ns.max_discrepancy) out << "max marginal discrepancy: " << *ns.max_discrepancy << "\n";
  if (chsh) out << "CHSH value: " << *chsh << "\n";
  return ok ? kExitPass : kExitCheckFailed;
}

// toyzoo ----------------------------------------------------------------

int toyzoo(const RunConfig& c, std::ostream& out) {
  if (!c.inputs.empty()) fail(ErrorCode::kInvalidArgument, "toyzoo takes no arguments");
  const auto zoo = quantum::toy_zoo();
  if (machine(c)) {
    for (const auto& t : zoo) {
      out << "theory " << t.name << " | S " << t.s << " | involution " << t.involution
          << " | R " << t.r << " | known-as " << t.known_as << "\n";
    }
    return kExitPass;
  }
  std::vector<std::vector<std::string>> rows = {{"theory", "S", "involution", "R", "known as"}};
  for (const auto& t : zoo) rows.push_back({t.name, t.s, t.involution, t.r, t.known_as});
  std::vector<std::size_t> width(5, 0);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << line << "\n";
  }
  return kExitPass;
}

}  // namespace

int dispatch(const RunConfig& c, std::ostream& out) {
  if (c.format != "table" && c.format != "machine") {
    fail(ErrorCode::kInvalidArgument, "unknown format '" + c.format + "'");
  }
  if (c.tolerance && !(*c.tolerance > 0.0)) {
    fail(ErrorCode::kInvalidArgument, "--tolerance must be positive");
  }
  if (c.subcommand == "theory-check") return theory_check(c, out);
  if (c.subcommand == "eval") return eval(c, out);
  if (c.subcommand == "eq") return eq(c, out);
  if (c.subcommand == "bell") return bell_command(c, out);
  if (c.subcommand == "toyzoo") return toyzoo(c, out);
  fail(ErrorCode::kInvalidArgument, "unknown subcommand '" + c.subcommand + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_seed) {
  RunConfig config;
  CLI::App app{"catprob: probabilistic theories over semirings"};
  app.require_subcommand(1);
  std::optional<std::uint64_t> seed;
  app.add_option("--semiring", config.semirings,
                 "Semiring id, e.g. ratnn or 'gf 3' (repeatable)");
  app.add_option("--tolerance", config.tolerance, "Tolerance for approximate semirings");
  app.add_option("--seed", seed, "Random seed (default " + std::to_string(kDefaultSeed) +
                                     ", or CATPROB_SEED)");
  app.add_option("--out", config.out, "Write the report to this file");
  app.add_option("--trials", config.trials, "Random trials per check");
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"table", "machine"}));

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"theory-check", "Self-test a classical theory or toy theory and report positivity"},
      {"eval", "Parse, typecheck and evaluate a diagram file"},
      {"eq", "Check a diagrammatic equation under random bindings"},
      {"bell", "Evaluate a Bell scenario and check no-signalling"},
      {"toyzoo", "List the supported toy theories"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("inputs", config.inputs, "Arguments");
    sub->callback([&config, name = name] { config.subcommand = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out;
    const int code = app.exit(e, help_out, err);
    out << help_out.str();
    return code == 0 ? kExitPass : kExitError;
  }

  try {
    if (seed) {
      config.seed = *seed;
    } else if (env_seed) {
      std::size_t used = 0;
      config.seed = std::stoull(*env_seed, &used);
      if (used != env_seed->size()) throw std::invalid_argument("trailing characters");
    }
  } catch (const std::exception&) {
    err << "error: invalid_argument: CATPROB_SEED must be an unsigned integer\n";
    return kExitError;
  }

  try {
    if (!config.out) return dispatch(config, out);
    std::ostringstream buffer;
    const int status = dispatch(config, buffer);
    std::ofstream file(*config.out, std::ios::binary);
    if (!(file << buffer.str())) fail(ErrorCode::kIo, "cannot write " + *config.out);
    return status;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace catprob::cli
