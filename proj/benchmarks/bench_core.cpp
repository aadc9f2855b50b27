#include <benchmark/benchmark.h>

#include "ripcert/graph.hpp"
#include "ripcert/pipeline.hpp"
#include "ripcert/rip.hpp"
#include "ripcert/rounding.hpp"
#include "ripcert/rng.hpp"
#include "ripcert/spectral.hpp"

using namespace ripcert;

namespace {

graph::RegularGraph bench_graph(int n) { return graph::gen_random_regular(n, 3, 7); }

void GenRandomRegular(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto g = graph::gen_random_regular(n, 3, seed++);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(GenRandomRegular)->Arg(16)->Arg(64)->Arg(256);

void MinExpansionSmallSets(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto g = bench_graph(n);
    for (auto _ : state) {
        auto report = graph::min_expansion_small_sets(g, n / 2);
        benchmark::DoNotOptimize(report);
    }
    state.SetComplexityN(n);
}
BENCHMARK(MinExpansionSmallSets)->DenseRange(10, 16, 2)->Complexity();

void SparseLambdaExact(benchmark::State& state) {
    const auto g = bench_graph(14);
    const auto l = spectral::laplacian(g);
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto result = spectral::sparse_lambda_exact(l, k);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(SparseLambdaExact)->DenseRange(2, 7, 1);

void RicExact(benchmark::State& state) {
    const auto m = pipeline::reduce(bench_graph(12));
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto estimate = rip::ric_exact(m, k);
        benchmark::DoNotOptimize(estimate);
    }
}
BENCHMARK(RicExact)->DenseRange(1, 5, 1);

void RicMonteCarlo(benchmark::State& state) {
    const auto m = pipeline::reduce(bench_graph(64));
    for (auto _ : state) {
        auto estimate = rip::ric_montecarlo(m, 6, static_cast<std::uint64_t>(state.range(0)), 3);
        benchmark::DoNotOptimize(estimate);
    }
}
BENCHMARK(RicMonteCarlo)->Arg(64)->Arg(512);

void FactorLaplacian(benchmark::State& state) {
    const auto l = spectral::laplacian(bench_graph(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        auto m = rip::factor_laplacian(l);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(FactorLaplacian)->Arg(16)->Arg(64)->Arg(128);

void SweepCut(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto g = bench_graph(n);
    Rng rng(5);
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n / 2; ++i) {
        x(i) = rng.next_unit_open();
    }
    for (auto _ : state) {
        auto result = rounding::sweep_cut(g, x);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(SweepCut)->Arg(16)->Arg(64)->Arg(256);

void GapCase2(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto report = pipeline::gap_experiment_case2(12, 3, 3, 0.5, seed++);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(GapCase2);

}  // namespace

BENCHMARK_MAIN();
