// Copyright 2026 The Authors.
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

#include <cstdint>
#include <memory>

#include <benchmark/benchmark.h>

#include "vsketch/instance.h"
#include "vsketch/pipeline.h"
#include "vsketch/sketch.h"
#include "vsketch/sketcher.h"
#include "vsketch/verify.h"

namespace vsketch {
namespace {

void BuildSketch(benchmark::State& state, Pipeline pipeline) {
  const int n = static_cast<int>(state.range(0));
  const ValuationInstance instance = BenchInstance(pipeline, n, 1);
  const BuildOptions options = PipelineOptions(pipeline);
  LedgerSnapshot ledger;
  for (auto _ : state) {
    const Sketch sketch =
        BuildFullSketch(MakeOracle(instance.valuation), options);
    ledger = sketch.ledger;
    benchmark::DoNotOptimize(sketch.groups.data());
  }
  state.counters["value_queries"] =
      static_cast<double>(ledger.TotalValueQueries());
  state.counters["demand_queries"] =
      static_cast<double>(ledger.TotalDemandQueries());
  state.counters["card_calls"] = static_cast<double>(ledger.card_calls);
}

void BM_BuildMatroid(benchmark::State& state) {
  BuildSketch(state, Pipeline::kMatroid);
}
BENCHMARK(BM_BuildMatroid)->RangeMultiplier(4)->Range(16, 1024)
    ->Unit(benchmark::kMillisecond);

void BM_BuildSubmodular(benchmark::State& state) {
  BuildSketch(state, Pipeline::kSubmodular);
}
BENCHMARK(BM_BuildSubmodular)->RangeMultiplier(4)->Range(16, 1024)
    ->Unit(benchmark::kMillisecond);

void BM_BuildSubadditive(benchmark::State& state) {
  BuildSketch(state, Pipeline::kSubadditive);
}
BENCHMARK(BM_BuildSubadditive)->RangeMultiplier(4)->Range(16, 1024)
    ->Unit(benchmark::kMillisecond);

void BM_Evaluate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ValuationInstance instance = BenchInstance(Pipeline::kSubmodular, n, 1);
  const Sketch sketch = BuildFullSketch(MakeOracle(instance.valuation),
                                        PipelineOptions(Pipeline::kSubmodular));
  Bundle s(n);
  for (int j = 0; j < n; j += 3) s.Insert(j);
  for (auto _ : state) benchmark::DoNotOptimize(Evaluate(sketch, s));
}
BENCHMARK(BM_Evaluate)->RangeMultiplier(4)->Range(16, 1024);

}  // namespace
}  // namespace vsketch

BENCHMARK_MAIN();
