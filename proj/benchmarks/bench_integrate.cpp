#include <benchmark/benchmark.h>

#include "orthint/integrator.hpp"
#include "orthint/oracle.hpp"

namespace {

using namespace orthint;

PowerMatrix diagonal(int size, int value) {
    std::vector<std::vector<int>> rows(size, std::vector<int>(size, 0));
    for (int i = 0; i < size; ++i) rows[i][i] = value;
    return PowerMatrix(rows);
}

void BM_IntegrateDiagonal(benchmark::State& state) {
    const PowerMatrix m = diagonal(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        MemoCache cache;
        benchmark::DoNotOptimize(integrate(m, {}, &cache));
    }
}
BENCHMARK(BM_IntegrateDiagonal)->DenseRange(2, 5);

void BM_IntegrateRecursionOnly(benchmark::State& state) {
    const PowerMatrix m = diagonal(static_cast<int>(state.range(0)), 2);
    IntegratorConfig cfg;
    cfg.method = IntegratorConfig::Method::RecursionOnly;
    for (auto _ : state) {
        MemoCache cache;
        benchmark::DoNotOptimize(integrate(m, cfg, &cache));
    }
}
BENCHMARK(BM_IntegrateRecursionOnly)->DenseRange(2, 5);

void BM_TwoVectorDegreeSweep(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    const PowerMatrix m({{degree, 0}, {0, degree}});
    for (auto _ : state) {
        MemoCache cache;
        benchmark::DoNotOptimize(integrate(m, {}, &cache));
    }
}
BENCHMARK(BM_TwoVectorDegreeSweep)->DenseRange(2, 10, 2);

void BM_HaarSample(benchmark::State& state) {
    GaussianSource source(42);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(haarSampleOrthogonal(n, source));
}
BENCHMARK(BM_HaarSample)->Arg(5)->Arg(20);

} // namespace

BENCHMARK_MAIN();
