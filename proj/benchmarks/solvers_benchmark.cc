// Copyright 2026 The linarr Authors
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

#include "linarr/generators.hpp"
#include "linarr/planar.hpp"
#include "linarr/projective.hpp"

namespace {

using linarr::FreeTree;

void BM_MaxProjective(benchmark::State& state) {
  const FreeTree tree = linarr::random_tree(static_cast<std::size_t>(state.range(0)), 7);
  const linarr::RootedTree rt(tree, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(linarr::max_projective(rt));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxProjective)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity();

void BM_MaxProjectiveCost(benchmark::State& state) {
  const FreeTree tree = linarr::random_tree(static_cast<std::size_t>(state.range(0)), 7);
  const linarr::RootedTree rt(tree, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(linarr::max_projective_cost(rt));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxProjectiveCost)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity();

void BM_EdgeRecords(benchmark::State& state) {
  const FreeTree tree = linarr::random_tree(static_cast<std::size_t>(state.range(0)), 7);
  const linarr::SubtreeSizeTable sizes(tree);
  for (auto _ : state) {
    benchmark::DoNotOptimize(linarr::build_edge_records(tree, sizes));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EdgeRecords)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity();

void BM_MaxPlanar(benchmark::State& state) {
  const FreeTree tree = linarr::random_tree(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(linarr::max_planar(tree));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxPlanar)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity();

// Long paths are the worst case for recursion depth.
void BM_MaxPlanarPath(benchmark::State& state) {
  const FreeTree tree = linarr::make_family(linarr::Family::kPath,
                                            static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(linarr::max_planar(tree));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxPlanarPath)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity();

void BM_MinPlanar(benchmark::State& state) {
  const FreeTree tree = linarr::random_tree(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(linarr::min_planar(tree));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MinPlanar)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity();

}  // namespace

BENCHMARK_MAIN();
