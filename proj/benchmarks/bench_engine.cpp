// Copyright 2026 The wgstate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <numbers>
#include <random>

#include <benchmark/benchmark.h>

#include "wgs/graphstate.hpp"
#include "wgs/measures.hpp"
#include "wgs/rdm_engine.hpp"

namespace {

using namespace wgs;

PhaseProfile power_chain(std::size_t n, double alpha) {
  return PhaseProfile(Lattice::chain(n, Boundary::open), CouplingLaw::power(alpha), 0.3 * std::numbers::pi);
}

// Args: N, |A|. Cost is linear in N and 3^|A|.
void BM_ReducedDensity(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = static_cast<std::size_t>(state.range(1));
  const auto profile = power_chain(n, 1.0);
  const auto input = ProductInput::plus(n);
  const auto subset = SiteSubset::range((n - a) / 2, a, n);
  EngineOptions opts;
  opts.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduced_density(profile, input, subset, true, opts));
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_ReducedDensity)
    ->ArgsProduct({{1000, 4000, 16000}, {2, 4, 6}})
    ->Unit(benchmark::kMillisecond);

void BM_BlockEntropy(benchmark::State &state) {
  const auto l = static_cast<std::size_t>(state.range(0));
  const std::size_t n = 2000;
  const auto profile = power_chain(n, 3.0);
  const auto input = ProductInput::plus(n);
  EngineOptions opts;
  opts.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(block_entropy(profile, input, Block{(n - l) / 2, l}, opts));
  }
}
BENCHMARK(BM_BlockEntropy)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_UpperBound(benchmark::State &state) {
  const auto l = static_cast<std::size_t>(state.range(0));
  const std::size_t n = 2000;
  const auto profile = power_chain(n, 3.0);
  const auto input = ProductInput::plus(n);
  EngineOptions opts;
  opts.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(block_entropy_upper(profile, input, Block{(n - l) / 2, l}, 4, opts));
  }
}
BENCHMARK(BM_UpperBound)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

// Random square GF(2) matrix of the given size.
void BM_Gf2Rank(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  BinaryMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, (rng() & 1U) != 0);
  }
  for (auto _ : state) benchmark::DoNotOptimize(gf2_rank(m));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_Gf2Rank)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNCubed);

void BM_GraphBlockEntropy2D(benchmark::State &state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  const Lattice grid({48, 48}, {Boundary::open});
  const PhaseProfile profile(grid, CouplingLaw::cutoff(2.0), std::numbers::pi);
  const SiteSubset block(centered_cube(grid, side), grid.size());
  for (auto _ : state) benchmark::DoNotOptimize(graph_block_entropy(profile, block));
}
BENCHMARK(BM_GraphBlockEntropy2D)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
