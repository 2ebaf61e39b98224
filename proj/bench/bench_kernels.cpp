// Copyright 2026 The corrspec Authors
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

// Serial reference versus OpenMP kernels.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "corrspec/correlations.hpp"
#include "corrspec/parallel.hpp"

namespace {

using namespace corrspec;

struct Problem {
    UnitaryMatrix u;
    InputSpec spec;
    OverlapMatrix s;
};

Problem make_problem(int n, int m) {
    auto rng = substream_engine(1, 0, 99);
    std::normal_distribution<double> normal;
    std::vector<double> t(static_cast<std::size_t>(n));
    for (auto& x : t) x = normal(rng);
    auto spec = InputSpec::from_times(m, t, 1.0);
    auto s = build_overlap_matrix(spec);
    return {sample_haar(m, 1), std::move(spec), std::move(s)};
}

void BM_CDatasetReference(benchmark::State& state) {
    const auto p = make_problem(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(c_dataset_reference(p.u, p.spec, p.s));
}

void BM_CDatasetKernel(benchmark::State& state) {
    const auto p = make_problem(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    const int workers = static_cast<int>(state.range(2));
    for (auto _ : state) benchmark::DoNotOptimize(c_dataset(p.u, p.spec, p.s, workers));
}

void BM_HomScan(benchmark::State& state) {
    HomScanConfig cfg;
    cfg.photon_count = 6;
    cfg.mode_count = 50;
    cfg.dt_grid = {0.0, 0.5, 1.0, 2.0, 4.0};
    cfg.trials_per_point = 64;
    cfg.circuit = CircuitMode::kFreshHaar;
    cfg.workers = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hom_scan(cfg));
}

}  // namespace

BENCHMARK(BM_CDatasetReference)->Args({6, 50})->Args({8, 200})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CDatasetKernel)
    ->ArgsProduct({{6}, {50}, {1, 2, 4}})
    ->ArgsProduct({{8}, {200}, {1, 2, 4}})
    ->Unit(benchmark::kMicrosecond)
    ->UseRealTime();
BENCHMARK(BM_HomScan)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
