/*
 * Copyright 2026 The bunchlab authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <benchmark/benchmark.h>

#include <random>

#include "bunchlab/permanent.hpp"

namespace {

bunchlab::ComplexMatrix random_matrix(std::size_t dim) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    bunchlab::ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            m(i, j) = bunchlab::cplx(entry(rng), entry(rng));
    return m;
}

void bench_serial(benchmark::State& state) {
    const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto p = bunchlab::permanent_serial(m);
        benchmark::DoNotOptimize(p);
    }
}

void bench_parallel(benchmark::State& state) {
    const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto p = bunchlab::permanent_parallel(m);
        benchmark::DoNotOptimize(p);
    }
}

void bench_naive(benchmark::State& state) {
    const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto p = bunchlab::permanent_naive(m);
        benchmark::DoNotOptimize(p);
    }
}

}  // namespace

BENCHMARK(bench_naive)->DenseRange(6, 9, 1);
BENCHMARK(bench_serial)->Arg(8)->Arg(12)->Arg(16)->Arg(20)->Arg(22);
BENCHMARK(bench_parallel)->Arg(8)->Arg(12)->Arg(16)->Arg(20)->Arg(22);

BENCHMARK_MAIN();
