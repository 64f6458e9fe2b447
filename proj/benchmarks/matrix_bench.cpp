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

#include <benchmark/benchmark.h>

#include <random>

#include "catprob/matrix.hpp"

namespace {

void BM_MultiplyRational(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const catprob::Semiring s = catprob::Semiring::rat();
  std::mt19937_64 rng(1);
  const auto a = catprob::Matrix::random(s, n, n, rng);
  const auto b = catprob::Matrix::random(s, n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(catprob::multiply(a, b));
}
BENCHMARK(BM_MultiplyRational)->Arg(4)->Arg(16)->Arg(32);

void BM_KronGaussian(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const catprob::Semiring s = catprob::Semiring::gauss_rat();
  std::mt19937_64 rng(2);
  const auto a = catprob::Matrix::random(s, n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(catprob::kron(a, a));
}
BENCHMARK(BM_KronGaussian)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
