// Copyright 2026 The HiPPP Authors
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

#include <vector>

#include <benchmark/benchmark.h>

#include "hippp/design.hpp"
#include "hippp/evaluate.hpp"
#include "hippp/powerflow.hpp"
#include "hippp/supply.hpp"

namespace hippp {
namespace {

const BatterySupply kSupply{1.0, 0.2, 9};

Layer1Design baseline_layer1() {
  DesignConfig cfg;
  return design_layer1(flatten(kSupply), cfg);
}

void BM_FlowLp(benchmark::State& state) {
  const ExpectedSet expected = flatten(kSupply);
  const Architecture arch = lshippp_from_budget(baseline_layer1(), 0.15, expected);
  const auto edges = arch.converter_edges();
  std::vector<std::vector<double>> sets;
  for (std::uint64_t s = 0; s < 64; ++s) sets.push_back(sample_battery_set(kSupply, s).capabilities);
  size_t i = 0;
  for (auto _ : state) {
    const LinearProgram lp = build_flow_lp(sets[i++ % sets.size()], edges);
    benchmark::DoNotOptimize(solve(lp));
  }
}
BENCHMARK(BM_FlowLp);

void BM_SolveFlowTwoStage(benchmark::State& state) {
  const ExpectedSet expected = flatten(kSupply);
  const Architecture arch = state.range(0) == 0
                                ? lshippp_from_budget(baseline_layer1(), 0.15, expected)
                                : cppp_from_budget(0.15, expected);
  std::vector<std::vector<double>> sets;
  for (std::uint64_t s = 0; s < 64; ++s) sets.push_back(sample_battery_set(kSupply, s).capabilities);
  size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(optimal_flow(sets[i++ % sets.size()], arch));
  state.SetLabel(state.range(0) == 0 ? "LS-HiPPP" : "C-PPP");
}
BENCHMARK(BM_SolveFlowTwoStage)->Arg(0)->Arg(1);

void BM_DesignLayer1(benchmark::State& state) {
  const ExpectedSet expected = flatten(kSupply);
  DesignConfig cfg;
  cfg.num_layer1 = static_cast<int>(state.range(0));
  cfg.num_rating_sets = 1;
  for (auto _ : state) benchmark::DoNotOptimize(design_layer1(expected, cfg));
  state.counters["candidates"] =
      static_cast<double>(count_interconnections(kSupply.count, cfg.num_layer1));
}
BENCHMARK(BM_DesignLayer1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_EvaluateArchitecture(benchmark::State& state) {
  const ExpectedSet expected = flatten(kSupply);
  const Architecture arch = lshippp_from_budget(baseline_layer1(), 0.15, expected);
  EvaluationOptions opts;
  opts.trials = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_architecture(arch, kSupply, opts));
  state.SetItemsProcessed(state.iterations() * opts.trials);
}
BENCHMARK(BM_EvaluateArchitecture)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace hippp

BENCHMARK_MAIN();
