#include <benchmark/benchmark.h>

#include "qident/enumerate.hpp"
#include "qident/lattice.hpp"
#include "qident/multisum.hpp"
#include "qident/series.hpp"

using namespace qident;

static void BM_series_mul(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    const Series a = poch_inf(1, 1, order).inverse();
    const Series b = poch_inf(2, 2, order);
    for (auto _ : state) {
        Series c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_series_mul)->Arg(16)->Arg(32);

static void BM_poch_inverse(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    const Series p = poch_inf(1, 1, order);
    for (auto _ : state) {
        Series inv = p.inverse();
        benchmark::DoNotOptimize(inv);
    }
}
BENCHMARK(BM_poch_inverse)->Arg(16)->Arg(32);

static void BM_admissible_gf(benchmark::State& state) {
    const ArrayShape shape(Family::AG, static_cast<int>(state.range(0)), 2);
    const int order = static_cast<int>(state.range(1));
    for (auto _ : state) {
        Series gf = admissible_gf(shape, order);
        benchmark::DoNotOptimize(gf);
    }
}
BENCHMARK(BM_admissible_gf)->Args({2, 16})->Args({3, 16})->Args({4, 12});

static void BM_tail_multisum(benchmark::State& state) {
    const int ell = static_cast<int>(state.range(0));
    const int order = static_cast<int>(state.range(1));
    for (auto _ : state) {
        Series t = tail_multisum(2, ell, false, order);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_tail_multisum)->Args({2, 16})->Args({3, 16})->Args({4, 20});

static void BM_max_path_sum(benchmark::State& state) {
    const ArrayShape shape(Family::AG, 3, 2);
    FrequencyArray fa(shape);
    fa.set(shape.value_cell(1, 9), 1);
    fa.set(shape.value_cell(4, 2), 1);
    fa.set(shape.value_cell(6, 6), 1);
    const std::map<int, int> slot{{shape.hat().row, 1}};
    for (auto _ : state) {
        int best = max_path_sum(fa, slot, 16);
        benchmark::DoNotOptimize(best);
    }
}
BENCHMARK(BM_max_path_sum);

BENCHMARK_MAIN();
