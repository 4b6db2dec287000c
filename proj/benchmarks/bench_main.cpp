#include <benchmark/benchmark.h>

#include "hsinfo/entropies.hpp"
#include "hsinfo/gauss_jacobi.hpp"
#include "hsinfo/linearization.hpp"
#include "hsinfo/measures.hpp"

namespace {

// Exact W_2 at l = 80: the r = 4 collapse with the largest cancellation in the figure grids.
void BM_ExactW2(benchmark::State& st) {
    const hsinfo::HyperState s(3, {80, static_cast<int>(st.range(0))});
    for (auto _ : st) benchmark::DoNotOptimize(hsinfo::entropic_moment_exact(s, 2));
}
BENCHMARK(BM_ExactW2)->Arg(0)->Arg(40)->Arg(79)->Unit(benchmark::kMillisecond);

void BM_SdCoefficient(benchmark::State& st) {
    const hsinfo::SDParams p{static_cast<int>(st.range(0)), static_cast<int>(st.range(1)), 0.0, 0.0, 0.5, 0.5};
    for (auto _ : st) benchmark::DoNotOptimize(hsinfo::sd_coefficient(p));
}
BENCHMARK(BM_SdCoefficient)->Args({2, 10})->Args({4, 10})->Args({4, 40})->Args({4, 80})->Args({6, 80})
    ->Unit(benchmark::kMicrosecond);

void BM_Shannon(benchmark::State& st) {
    const hsinfo::HyperState s(3, {80, static_cast<int>(st.range(0))});
    for (auto _ : st) benchmark::DoNotOptimize(hsinfo::shannon_entropy(s));
}
BENCHMARK(BM_Shannon)->Arg(0)->Arg(40)->Arg(79)->Unit(benchmark::kMillisecond);

void BM_QuadratureWq(benchmark::State& st) {
    const hsinfo::HyperState s(3, {static_cast<int>(st.range(0)), 0});
    for (auto _ : st) benchmark::DoNotOptimize(hsinfo::entropic_moment_quadrature(s, 2.5));
}
BENCHMARK(BM_QuadratureWq)->Arg(10)->Arg(80)->Unit(benchmark::kMillisecond);

// Uncached rule construction; the production path hits the cache after the first call.
void BM_GaussJacobi(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(hsinfo::compute_gauss_jacobi(n, 0.5, 2.5));
}
BENCHMARK(BM_GaussJacobi)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);

void BM_FisherShannonComplexity(benchmark::State& st) {
    const hsinfo::HyperState s(3, {50, static_cast<int>(st.range(0))});
    for (auto _ : st) benchmark::DoNotOptimize(hsinfo::complexity_fisher_shannon(s));
}
BENCHMARK(BM_FisherShannonComplexity)->Arg(0)->Arg(25)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
