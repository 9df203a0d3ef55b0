// Microbenchmarks for the exponential kernels: clique enumeration, coloring
// enumeration, deletion-contraction, and the statistics built on them.

#include <benchmark/benchmark.h>

#include "curvex/coloring.hpp"
#include "curvex/curvature.hpp"
#include "curvex/generators.hpp"

using namespace curvex;

namespace {

Graph seeded(int n, int p_num = 1, int p_den = 2) {
    return erdos_renyi_graph(n, p_num, p_den, 42);
}

void BM_CliqueEnumeration(benchmark::State& state) {
    const Graph g = seeded(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto cliques = enumerate_cliques(g);
        benchmark::DoNotOptimize(cliques);
    }
}
BENCHMARK(BM_CliqueEnumeration)->Arg(10)->Arg(14)->Arg(18)->Arg(22);

void BM_CurvatureVector(benchmark::State& state) {
    const Graph g = seeded(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto ks = curvature_vector(g);
        benchmark::DoNotOptimize(ks);
    }
}
BENCHMARK(BM_CurvatureVector)->Arg(10)->Arg(14)->Arg(18);

void BM_ColoringEnumeration(benchmark::State& state) {
    const Graph g = fig6_graph();
    for (auto _ : state) {
        auto space = enumerate_colorings(g, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(space);
    }
}
BENCHMARK(BM_ColoringEnumeration)->Arg(4)->Arg(5)->Arg(6);

void BM_CountColorings(benchmark::State& state) {
    const Graph g = seeded(static_cast<int>(state.range(0)));
    const int chrom = chromatic_number(g);
    for (auto _ : state) benchmark::DoNotOptimize(count_colorings(g, chrom + 1));
}
BENCHMARK(BM_CountColorings)->Arg(8)->Arg(10)->Arg(12);

void BM_ChromaticPolynomial(benchmark::State& state) {
    const Graph g = seeded(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto poly = chromatic_polynomial(g);
        benchmark::DoNotOptimize(poly);
    }
}
BENCHMARK(BM_ChromaticPolynomial)->Arg(8)->Arg(10)->Arg(12);

void BM_IndexExpectation(benchmark::State& state) {
    const Graph g = fig6_graph();
    for (auto _ : state) {
        auto e = index_expectation(g, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_IndexExpectation)->Arg(4)->Arg(5);

void BM_InductiveDimension(benchmark::State& state) {
    const Graph g = seeded(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(inductive_dimension(g));
}
BENCHMARK(BM_InductiveDimension)->Arg(10)->Arg(14);

}  // namespace

BENCHMARK_MAIN();
