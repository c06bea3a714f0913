#include <benchmark/benchmark.h>

#include "qwnull/distinguishability.hpp"
#include "qwnull/graph.hpp"
#include "qwnull/lattice.hpp"
#include "qwnull/oracle.hpp"

using namespace qwnull;

static void BM_EnumerateOrder4(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_labeled_connected(4));
}
BENCHMARK(BM_EnumerateOrder4);

static void BM_EnumerateOrder5(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_labeled_connected(5));
}
BENCHMARK(BM_EnumerateOrder5);

static void BM_DiagNullK4(benchmark::State& state) {
    const auto l = laplacian(complete_graph(4));
    for (auto _ : state) benchmark::DoNotOptimize(diag_null(l));
}
BENCHMARK(BM_DiagNullK4);

static void BM_DiagNullK5(benchmark::State& state) {
    const auto l = laplacian(complete_graph(5));
    for (auto _ : state) benchmark::DoNotOptimize(diag_null(l));
}
BENCHMARK(BM_DiagNullK5);

static void BM_PairNullOrder4(benchmark::State& state) {
    const auto li = laplacian(LabeledGraph(4, {{0, 1}, {1, 2}, {2, 3}}));
    const auto lj = laplacian(LabeledGraph(4, {{0, 1}, {0, 2}, {0, 3}}));
    for (auto _ : state) benchmark::DoNotOptimize(pair_null(li, lj));
}
BENCHMARK(BM_PairNullOrder4);

static void BM_PairNullFullStackOrder4(benchmark::State& state) {
    const auto li = laplacian(LabeledGraph(4, {{0, 1}, {1, 2}, {2, 3}}));
    const auto lj = laplacian(LabeledGraph(4, {{0, 1}, {0, 2}, {0, 3}}));
    for (auto _ : state)
        benchmark::DoNotOptimize(pair_null(li, lj, PairNullStrategy::kFullStack));
}
BENCHMARK(BM_PairNullFullStackOrder4);

static void BM_ClassifyOrder3(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(classify(3));
}
BENCHMARK(BM_ClassifyOrder3);

static void BM_ClassifyOrder4(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(classify(4));
}
BENCHMARK(BM_ClassifyOrder4)->Unit(benchmark::kMillisecond)->Iterations(3);

static void BM_ExpmUnitaryOrder5(benchmark::State& state) {
    const auto l = laplacian(complete_graph(5));
    double t = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(expm_unitary(l, t));
        t += 0.1;
    }
}
BENCHMARK(BM_ExpmUnitaryOrder5);

static void BM_WResidualOrder4(benchmark::State& state) {
    const UnitaryCache ui(laplacian(LabeledGraph(4, {{0, 1}, {1, 2}, {2, 3}})));
    const UnitaryCache uj(laplacian(complete_graph(4)));
    const std::vector<std::complex<double>> psi(16, {0.25, 0.0});
    double t = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(w_residual(ui, uj, psi, t, 2.0 * t));
        t += 0.05;
    }
}
BENCHMARK(BM_WResidualOrder4);

BENCHMARK_MAIN();
