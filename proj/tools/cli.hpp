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

// The catprob command-line tool as a library, so tests can drive it without
// spawning processes.

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace catprob::cli {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

// Exit statuses.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitError = 2;

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> semirings;  // --semiring, repeatable
  std::optional<double> tolerance;
  std::vector<std::string> inputs;
  std::optional<std::string> out;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::size_t> trials;
  std::string format = "table";
};

// Runs one command. Reports go to `out` (or the --out file), diagnostics to
// `err`. `args` excludes the program name. `env_seed` is the value of
// CATPROB_SEED, if set; it overrides the default seed but not --seed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_seed = std::nullopt);

// Executes an already parsed configuration.
int dispatch(const RunConfig& config, std::ostream& out);

}  // namespace catprob::cli
