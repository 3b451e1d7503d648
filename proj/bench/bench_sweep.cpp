// Copyright 2026 The hpruns Authors. All Rights Reserved.
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

// Serial vs OpenMP exhaustive sweeps, and the quadratic oracle vs the fast detector.

#include <benchmark/benchmark.h>

#include "hpruns/campaigns.hpp"
#include "hpruns/families.hpp"
#include "hpruns/runs.hpp"

namespace {

void BM_FrontierSerial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hpruns::exhaustive_frontier(n, 2, hpruns::Execution::serial));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(hpruns::canonical_count(n, 2)));
}
BENCHMARK(BM_FrontierSerial)->DenseRange(14, 18, 2)->Unit(benchmark::kMillisecond);

void BM_FrontierParallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hpruns::exhaustive_frontier(n, 2, hpruns::Execution::parallel));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(hpruns::canonical_count(n, 2)));
}
BENCHMARK(BM_FrontierParallel)->DenseRange(14, 18, 2)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_HandlesSerial(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(hpruns::verify_handles(14, 2, hpruns::Execution::serial));
    }
}
BENCHMARK(BM_HandlesSerial)->Unit(benchmark::kMillisecond);

void BM_HandlesParallel(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(hpruns::verify_handles(14, 2, hpruns::Execution::parallel));
    }
}
BENCHMARK(BM_HandlesParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_FindRunsOracle(benchmark::State& state) {
    const hpruns::Word w = hpruns::fib_word(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hpruns::find_runs_oracle(w));
    }
    state.SetComplexityN(static_cast<std::int64_t>(w.size()));
}
BENCHMARK(BM_FindRunsOracle)->DenseRange(4, 10, 2)->Unit(benchmark::kMicrosecond);

void BM_FindRuns(benchmark::State& state) {
    const hpruns::Word w = hpruns::fib_word(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hpruns::find_runs(w));
    }
    state.SetComplexityN(static_cast<std::int64_t>(w.size()));
}
BENCHMARK(BM_FindRuns)->DenseRange(4, 19, 3)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
