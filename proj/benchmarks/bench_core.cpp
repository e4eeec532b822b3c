#include <benchmark/benchmark.h>

#include "ringforge/blocks.hpp"
#include "ringforge/constructors.hpp"
#include "ringforge/oracle.hpp"
#include "ringforge/report.hpp"

using namespace ringforge;

static void BM_SubgroupSpan(benchmark::State& state) {
    FiniteRing r = upper_triangular(zmod(3), 2);
    std::vector<Elem> gens;
    for (int i = 0; i < r.dim(); ++i) gens.push_back(r.mul(r.basis(i), r.basis((i + 1) % r.dim())));
    for (auto _ : state) benchmark::DoNotOptimize(Subgroup::span(r, gens).size());
}
BENCHMARK(BM_SubgroupSpan);

static void BM_RadicalScan_T2F3(benchmark::State& state) {
    FiniteRing r = upper_triangular(zmod(3), 2);
    for (auto _ : state) benchmark::DoNotOptimize(jacobson_radical(r).size());
}
BENCHMARK(BM_RadicalScan_T2F3);

static void BM_RadicalScan_M2Z4(benchmark::State& state) {
    FiniteRing r = matrix_ring(zmod(4), 2);
    for (auto _ : state) benchmark::DoNotOptimize(jacobson_radical(r).size());
}
BENCHMARK(BM_RadicalScan_M2Z4);

static void BM_FullAnalysis_M2Z4(benchmark::State& state) {
    FiniteRing r = matrix_ring(zmod(4), 2);
    for (auto _ : state) benchmark::DoNotOptimize(analyze_ring(r).size);
}
BENCHMARK(BM_FullAnalysis_M2Z4);

static void BM_ExtOracle_M2F2(benchmark::State& state) {
    FiniteRing r = matrix_ring(zmod(2), 2);
    SimplesData d = simple_classes(r);
    for (auto _ : state) benchmark::DoNotOptimize(oracle::brute_ext_nonsplit(d, 0, 0));
}
BENCHMARK(BM_ExtOracle_M2F2);

static void BM_BruteRadical_T2F3(benchmark::State& state) {
    FiniteRing r = upper_triangular(zmod(3), 2);
    for (auto _ : state) benchmark::DoNotOptimize(oracle::brute_radical(r).size());
}
BENCHMARK(BM_BruteRadical_T2F3);

BENCHMARK_MAIN();
