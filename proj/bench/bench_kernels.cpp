// Copyright 2026 The gaussmode Authors
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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "gaussmode/kernels.hpp"
#include "gaussmode/oracle.hpp"

namespace {

using namespace gaussmode;

QuadratureCoefficients bench_state() {
    return QuadratureCoefficients::validate(Complex(1.4, 0.6), Complex(0.9, -0.3), Complex(0.7, 0.5));
}

void BM_MarginalSerial(benchmark::State &state) {
    const auto c = bench_state();
    const MarginalKernel k = marginal_kernel(c, Mode::kFirst);
    const GridSpec g = auto_grid(c, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::marginal_matrix_serial(k, g));
}

void BM_MarginalParallel(benchmark::State &state) {
    const auto c = bench_state();
    const MarginalKernel k = marginal_kernel(c, Mode::kFirst);
    const GridSpec g = auto_grid(c, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::marginal_matrix_parallel(k, g));
    state.counters["threads"] = omp_get_max_threads();
}

void BM_MomentsSerial(benchmark::State &state) {
    const auto c = bench_state();
    const GridSpec g = auto_grid(c, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::wavefunction_moments_serial(c, g, kFiniteDifferenceFraction * g.spacing()));
    }
}

void BM_MomentsParallel(benchmark::State &state) {
    const auto c = bench_state();
    const GridSpec g = auto_grid(c, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            kernels::wavefunction_moments_parallel(c, g, kFiniteDifferenceFraction * g.spacing()));
    }
    state.counters["threads"] = omp_get_max_threads();
}

void BM_NumericSpectrum(benchmark::State &state) {
    const auto c = bench_state();
    const Eigen::MatrixXd m = discretize_marginal(c, Mode::kFirst, auto_grid(c, static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(numeric_spectrum(m));
}

BENCHMARK(BM_MarginalSerial)->Arg(256)->Arg(512)->Arg(1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MarginalParallel)->Arg(256)->Arg(512)->Arg(1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MomentsSerial)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MomentsParallel)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NumericSpectrum)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
