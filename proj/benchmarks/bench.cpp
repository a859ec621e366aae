// Copyright 2026 The csskit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <benchmark/benchmark.h>

#include <vector>

#include "csskit/channels.hpp"
#include "csskit/css_solver.hpp"
#include "csskit/gilbert.hpp"
#include "csskit/linalg.hpp"
#include "csskit/locc_search.hpp"
#include "csskit/metrics.hpp"

namespace {

using namespace csskit;

void BM_HermEig(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ComplexMatrix m = random_state({n}, 1).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(herm_eig(m));
}
BENCHMARK(BM_HermEig)->Arg(4)->Arg(6)->Arg(8)->Arg(16);

void BM_ClosestSeparable(benchmark::State& state) {
  const Dims dims{2, static_cast<std::size_t>(state.range(0))};
  Rng rng(2);
  std::vector<DensityMatrix> corpus;
  while (corpus.size() < 64) {
    auto rho = random_state(dims, rng);
    try {
      closest_separable(rho, Bipartition::first_vs_rest(2));
      corpus.push_back(std::move(rho));
    } catch (const InvalidCssError&) {
    }
  }
  std::size_t k = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(closest_separable(corpus[k++ % corpus.size()], Bipartition::first_vs_rest(2)));
}
BENCHMARK(BM_ClosestSeparable)->Arg(2)->Arg(3);

void BM_LowerBound(benchmark::State& state) {
  const auto rho = random_state({2, 3}, 3);
  for (auto _ : state) benchmark::DoNotOptimize(lower_bound(rho, Bipartition::first_vs_rest(2)));
}
BENCHMARK(BM_LowerBound);

void BM_Gilbert(benchmark::State& state) {
  GilbertOptions options;
  options.iters = static_cast<std::size_t>(state.range(0));
  options.mode = state.range(1) ? GilbertMode::Pairwise : GilbertMode::Plain;
  const auto rho = bell_state();
  for (auto _ : state) benchmark::DoNotOptimize(gilbert_css(rho, Bipartition::first_vs_rest(2), options));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Gilbert)->Args({500, 0})->Args({500, 1})->Unit(benchmark::kMillisecond);

void BM_LoccObjective(benchmark::State& state) {
  Rng rng(4);
  std::vector<double> params(kLoccParams);
  for (auto& a : params) a = rng.normal();
  const auto env = werner_state(1.0 / 3.0);
  const auto rho = bell_state();
  for (auto _ : state) benchmark::DoNotOptimize(locc_objective(rho, env, params));
}
BENCHMARK(BM_LoccObjective);

}  // namespace

BENCHMARK_MAIN();
