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

// End-to-end flows across modules: scenario text to empirical model to
// export and back, and the same Bell experiment written as a diagram.

#include <gtest/gtest.h>

#include <filesystem>

#include "catprob/bell.hpp"
#include "catprob/equation.hpp"
#include "catprob/scenario.hpp"

namespace catprob {
namespace {

constexpr const char* kCoins = R"(
backend classical
semiring ratnn
party A
  choices keep flip
  outcomes h t
  labels h t
  effect keep h [1, 0]
  effect keep t [0, 1]
  effect flip h [0, 1]
  effect flip t [1, 0]
party B
  choices keep flip
  outcomes h t
  labels h t
  effect keep h [1, 0]
  effect keep t [0, 1]
  effect flip h [0, 1]
  effect flip t [1, 0]
state vector [1/2, 1/4, 1/8, 1/8]
)";

// The same experiment as a diagram: the shared state feeds both boxes and
// the choices are routed past it.
constexpr const char* kCoinsDiagram = R"(
semiring ratnn
sys M1 classical {keep flip}
sys M2 classical {keep flip}
sys H1 classical {h t}
sys H2 classical {h t}
sys O1 classical {h t}
sys O2 classical {h t}
gen rho : I -> H1 H2 = [[1/2], [1/4], [1/8], [1/8]]
gen B1 : M1 H1 -> O1 = [[1, 0, 0, 1], [0, 1, 1, 0]]
gen B2 : M2 H2 -> O2 = [[1, 0, 0, 1], [0, 1, 1, 0]]
(id[M1] * rho * id[M2]) ; (id[M1 H1] * sw[H2, M2]) ; (B1 * B2)
)";

bell::EmpiricalModel coins_model() {
  const auto s = std::get<bell::Scenario<ClassicalBackend>>(bell::parse_scenario(kCoins));
  bell::validate_scenario(s);
  return bell::evaluate(s);
}

TEST(Pipeline, ScenarioExportRoundTrip) {
  const auto model = coins_model();
  EXPECT_TRUE(bell::check_rows_normalised(model).ok);
  EXPECT_TRUE(bell::no_signalling_check(model).ok);
  const auto back = bell::parse_empirical_model(bell::export_empirical_model(model, "machine"));
  EXPECT_EQ(bell::export_empirical_model(back, "table"),
            bell::export_empirical_model(model, "table"));
  // A reports t after flipping and B reports h after keeping: coins (h, h).
  EXPECT_EQ(model.probability({"flip", "keep"}, {"t", "h"}), model.semiring.parse("1/2"));
}

TEST(Pipeline, DiagramAgreesWithScenarioEvaluator) {
  const auto model = coins_model();
  const auto results = diagram::evaluate_document(kCoinsDiagram, 0);
  ASSERT_EQ(results.size(), 1u);
  EXPECT_EQ(results[0].type, "M1 M2 -> O1 O2");
  const Matrix& box = results[0].matrix;
  ASSERT_EQ(box.rows(), model.num_joint_outcomes());
  ASSERT_EQ(box.cols(), model.num_contexts());
  for (std::size_t c = 0; c < model.num_contexts(); ++c) {
    for (std::size_t o = 0; o < model.num_joint_outcomes(); ++o) {
      EXPECT_TRUE(model.semiring.equal(box(o, c), model.table[c][o]))
          << model.context_label(c) << " / " << model.outcome_label(o);
    }
  }
}

TEST(Pipeline, EveryScenarioFileIsNoSignalling) {
  std::size_t count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(CATPROB_SCENARIO_DIR)) {
    if (entry.path().extension() != ".scn") continue;
    const auto s = bell::load_scenario(entry.path());
    const auto model = std::visit(
        [](const auto& sc) {
          bell::validate_scenario(sc);
          return bell::evaluate(sc);
        },
        s);
    EXPECT_TRUE(bell::check_rows_normalised(model).ok) << entry.path();
    EXPECT_TRUE(bell::no_signalling_check(model).ok) << entry.path();
    ++count;
  }
  EXPECT_GE(count, 4u);
}

TEST(Pipeline, CorpusHoldsUnderAnotherSeed) {
  for (const auto& entry : std::filesystem::directory_iterator(CATPROB_EQUATION_DIR)) {
    const auto report = diagram::check_equation_dir(entry.path(), 2, 987654321);
    EXPECT_TRUE(report.ok()) << entry.path();
  }
}

}  // namespace
}  // namespace catprob
