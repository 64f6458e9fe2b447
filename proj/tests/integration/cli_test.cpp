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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "catprob/bell.hpp"

namespace catprob::cli {
namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, std::optional<std::string> env_seed = {}) {
  std::ostringstream out, err;
  const int status = run(args, out, err, env_seed);
  return {status, out.str(), err.str()};
}

std::string scenario(const std::string& name) {
  return std::string(CATPROB_SCENARIO_DIR) + "/" + name;
}

std::string equation(const std::string& name) {
  return std::string(CATPROB_EQUATION_DIR) + "/" + name;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("catprob_cli_test_" + name);
  std::ofstream(path) << text;
  return path;
}

TEST(Cli, TheoryCheckReportsPositivity) {
  const auto r = run_cli({"theory-check", "ratnn", "--trials", "10"});
  EXPECT_EQ(r.status, kExitPass);
  EXPECT_NE(r.out.find("positive semiring: yes"), std::string::npos);
  EXPECT_NE(r.out.find("result: PASS"), std::string::npos);

  const auto gf = run_cli({"theory-check", "gf", "3", "--trials", "5"});
  EXPECT_EQ(gf.status, kExitPass);
  EXPECT_NE(gf.out.find("positive semiring: no (witness: 1, 2)"), std::string::npos);
}

TEST(Cli, TheoryCheckAcceptsToyTheories) {
  for (const char* name : {"relational", "hyperbolic", "modal(2)", "real"}) {
    const auto r = run_cli({"theory-check", name, "--trials", "3"});
    EXPECT_EQ(r.status, kExitPass) << name << r.err;
    EXPECT_NE(r.out.find("toy theory"), std::string::npos);
  }
  const auto modal = run_cli({"theory-check", "modal", "2", "--trials", "3"});
  EXPECT_NE(modal.out.find("scalars gf 2"), std::string::npos);
}

TEST(Cli, BellPrintsTableAndNoSignalling) {
  const auto r = run_cli({"bell", scenario("chsh-345.scn")});
  EXPECT_EQ(r.status, kExitPass) << r.err;
  EXPECT_NE(r.out.find("0,1 | 8/25  9/50  9/50  8/25"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("no-signalling: PASS"), std::string::npos);
  EXPECT_NE(r.out.find("CHSH value: 2\n"), std::string::npos);
}

TEST(Cli, BellMachineOutputCarriesTheModel) {
  const auto r = run_cli({"bell", scenario("chsh-345.scn"), "--format", "machine"});
  ASSERT_EQ(r.status, kExitPass);
  const std::string model = r.out.substr(0, r.out.find("rows-normalised"));
  const auto e = bell::parse_empirical_model(model);
  EXPECT_EQ(e.probability({"0", "1"}, {"0", "0"}), e.semiring.parse("8/25"));
  EXPECT_NE(r.out.find("no-signalling pass"), std::string::npos);
}

TEST(Cli, BellToleranceNeedsApproximateScenario) {
  EXPECT_EQ(run_cli({"bell", scenario("chsh-345.scn"), "--tolerance", "1e-3"}).status,
            kExitError);
  const auto r = run_cli({"bell", scenario("tsirelson.scn"), "--tolerance", "1e-12"});
  EXPECT_EQ(r.status, kExitPass) << r.err;
}

TEST(Cli, ToyZooListsTheories) {
  const auto r = run_cli({"toyzoo"});
  EXPECT_EQ(r.status, kExitPass);
  for (const char* row : {"quantum-exact", "real", "hyperbolic", "relational", "modal(2)"}) {
    EXPECT_NE(r.out.find(row), std::string::npos) << row;
  }
  const auto m = run_cli({"toyzoo", "--format", "machine"});
  EXPECT_NE(m.out.find("theory hyperbolic | S split-rat | involution a+bj -> a-bj | R rat"),
            std::string::npos)
      << m.out;
}

TEST(Cli, EqualityAndInequality) {
  const auto ok = run_cli({"eq", equation("classical-discard-tensor"), "--trials", "3"});
  EXPECT_EQ(ok.status, kExitPass) << ok.err;
  EXPECT_NE(ok.out.find("result: equal"), std::string::npos);

  const auto b = write_temp("b.txt", "semiring ratnn\nsys X classical 2\ngen f : X -> X = random\n");
  const auto l = write_temp("l.diag", "f ; disc[X]\n");
  const auto rr = write_temp("r.diag", "disc[X]\n");
  const auto bad = run_cli({"eq", l.string(), rr.string(), b.string()});
  EXPECT_EQ(bad.status, kExitCheckFailed);
  EXPECT_NE(bad.out.find("unequal, trial 0: entry (0, 0)"), std::string::npos) << bad.out;
}

TEST(Cli, EvalPrintsMatrices) {
  const auto d = write_temp("e.diag", "semiring gf 3\nsys X classical 2\n2 . state[X, 1]\n");
  const auto r = run_cli({"eval", d.string()});
  EXPECT_EQ(r.status, kExitPass) << r.err;
  EXPECT_EQ(r.out, "classical gf 3: I -> X\n  [0]\n  [2]\n");
  const auto over = run_cli({"eval", d.string(), "--semiring", "rat"});
  EXPECT_EQ(over.out, "classical rat: I -> X\n  [0]\n  [2]\n");
}

TEST(Cli, ToleranceOnlyForApproximateSemirings) {
  const auto d = write_temp("t.diag", "sys X classical 2\nstate[X, 0]\n");
  EXPECT_EQ(run_cli({"eval", d.string(), "--semiring", "rat", "--tolerance", "1e-3"}).status,
            kExitError);
  EXPECT_EQ(
      run_cli({"eval", d.string(), "--semiring", "complex-f64", "--tolerance", "1e-3"}).status,
      kExitPass);
  EXPECT_EQ(run_cli({"theory-check", "rat", "--tolerance", "1e-3"}).status, kExitError);
}

TEST(Cli, SameSeedSameBytes) {
  const auto d = write_temp("r.diag",
                            "semiring rat\nsys X classical 3\ngen f : X -> X = random\nf ; f\n");
  const auto a = run_cli({"eval", d.string(), "--seed", "9"});
  const auto b = run_cli({"eval", d.string(), "--seed", "9"});
  const auto c = run_cli({"eval", d.string(), "--seed", "10"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  EXPECT_EQ(run_cli({"eval", d.string()}, "9").out, a.out);
  // An explicit --seed wins over the environment.
  EXPECT_EQ(run_cli({"eval", d.string(), "--seed", "9"}, "10").out, a.out);
  EXPECT_EQ(run_cli({"eval", d.string()}, "nine").status, kExitError);
}

TEST(Cli, OutWritesTheReport) {
  const auto path = std::filesystem::temp_directory_path() / "catprob_cli_test_out.txt";
  std::filesystem::remove(path);
  const auto r = run_cli({"toyzoo", "--out", path.string()});
  EXPECT_EQ(r.status, kExitPass);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), run_cli({"toyzoo"}).out);
}

TEST(Cli, ErrorsExitNonzeroWithMessages) {
  const auto missing = run_cli({"bell", "no-such.scn"});
  EXPECT_EQ(missing.status, kExitError);
  EXPECT_NE(missing.err.find("error: io:"), std::string::npos);
  const auto bad = write_temp("bad.diag", "sys X classical 2\ndisc[X] ; id[X]\n");
  const auto typed = run_cli({"eval", bad.string(), "--semiring", "ratnn"});
  EXPECT_EQ(typed.status, kExitError);
  EXPECT_NE(typed.err.find("error: type:"), std::string::npos) << typed.err;
  EXPECT_EQ(run_cli({}).status, kExitError);
  EXPECT_EQ(run_cli({"toyzoo", "--format", "json"}).status, kExitError);
  EXPECT_EQ(run_cli({"theory-check", "quaternions"}).status, kExitError);
  EXPECT_EQ(run_cli({"--help"}).status, kExitPass);
}

}  // namespace
}  // namespace catprob::cli
