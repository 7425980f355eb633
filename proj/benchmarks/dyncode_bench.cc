// Copyright 2026 The dyncode Authors
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

#include "dyncode/classification.h"
#include "dyncode/distance.h"
#include "dyncode/floquet.h"
#include "dyncode/library.h"

namespace {

using namespace dyncode;

void BM_ClassifyChain(benchmark::State &state) {
    const size_t n = static_cast<size_t>(state.range(0));
    DynamicalCode code = build_1d_chain(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_classification(code, code.cycle_length(), n + 1));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClassifyChain)->RangeMultiplier(2)->Range(10, 160)->Complexity(benchmark::oNCubed);

void BM_ClassifyHoneycomb(benchmark::State &state) {
    const size_t l = static_cast<size_t>(state.range(0));
    DynamicalCode code = honeycomb(l, l);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_classification(code, 4));
    }
}
BENCHMARK(BM_ClassifyHoneycomb)->Arg(3)->Arg(6)->Arg(9);

void BM_IsgDistanceHoneycomb(benchmark::State &state) {
    DynamicalCode code = honeycomb(3, 3);
    SearchOptions options{6, static_cast<size_t>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_weight_outside(code.s0, code.s0, code.n, options));
    }
}
BENCHMARK(BM_IsgDistanceHoneycomb)->Arg(1)->Arg(2);

void BM_WorstCaseIteration(benchmark::State &state) {
    const size_t n = static_cast<size_t>(state.range(0));
    DynamicalCode code = build_worst_case_sequence(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(iterate_cycles(code, n + 2));
    }
}
BENCHMARK(BM_WorstCaseIteration)->DenseRange(3, 6);

}  // namespace

BENCHMARK_MAIN();
