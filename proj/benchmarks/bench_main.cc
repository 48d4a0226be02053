// Copyright 2026 The bellwb Authors
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

#include <benchmark/benchmark.h>

#include "bellwb/bellwb.h"

namespace bellwb {
namespace {

void BM_LhvBruteForce(benchmark::State &state) {
    const auto s = make_scenario(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lhv_bound_bruteforce(s).value);
    }
}
BENCHMARK(BM_LhvBruteForce)->Args({2, 5})->Args({3, 4})->Args({4, 3})->Args({3, 6})->Unit(benchmark::kMillisecond);

void BM_BellOperatorSum(benchmark::State &state) {
    const auto s = make_scenario(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bell_operator_sum(s));
    }
}
BENCHMARK(BM_BellOperatorSum)->Args({3, 5})->Args({4, 5})->Args({6, 3})->Unit(benchmark::kMillisecond);

void BM_JacobiEigenvalues(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const auto rho = dur_state(n, 0.3);
    const auto pt = partial_transpose(rho.matrix(), QubitIndexSet({0}), n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eigenvalues(pt));
    }
}
BENCHMARK(BM_JacobiEigenvalues)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_CorrelationTensor(benchmark::State &state) {
    const auto rho = ghz_state(static_cast<int>(state.range(0)), GhzSign::kPlus).projector();
    for (auto _ : state) {
        benchmark::DoNotOptimize(correlation_tensor(rho));
    }
}
BENCHMARK(BM_CorrelationTensor)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_FrameSearch(benchmark::State &state) {
    const auto s = make_scenario(3, 3);
    const auto rho = generalized_ghz(3, 0.4).projector();
    for (auto _ : state) {
        benchmark::DoNotOptimize(ns_condition_value(s, rho, 4, 1).value);
    }
}
BENCHMARK(BM_FrameSearch)->Unit(benchmark::kMillisecond);

void BM_SimulateProtocol(benchmark::State &state) {
    const CcpTask task(make_scenario(3, 3));
    SimulationOptions opts;
    opts.trials = 100000;
    const auto kind = state.range(0) ? Protocol::kQuantum : Protocol::kClassical;
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_protocol(task, kind, opts).successes);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * opts.trials));
}
BENCHMARK(BM_SimulateProtocol)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace bellwb

BENCHMARK_MAIN();
