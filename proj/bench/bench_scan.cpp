// Serial reference versus OpenMP scan on the per-graph kernels that dominate
// the verification runs: spectral radii over an enumerated family, and the
// canonicalization-heavy enumeration step itself.

#include <benchmark/benchmark.h>

#include "specex/canonical.hpp"
#include "specex/combinat.hpp"
#include "specex/enumerate.hpp"
#include "specex/scan.hpp"
#include "specex/spectral.hpp"

using namespace specex;

namespace {

const std::vector<Graph>& corpus() {
    static const std::vector<Graph> graphs = connected_graphs(7);
    return graphs;
}

void spectral_scan(benchmark::State& state, bool parallel) {
    const auto& graphs = corpus();
    scan::Options opt;
    opt.parallel = parallel;
    for (auto _ : state) {
        auto lambdas = scan::map_ordered<double>(
            graphs.size(), [&](std::size_t i) { return spectral_radius(graphs[i]).lambda; }, opt);
        benchmark::DoNotOptimize(lambdas);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(graphs.size()));
}

void independence_scan(benchmark::State& state, bool parallel) {
    const auto& graphs = corpus();
    scan::Options opt;
    opt.parallel = parallel;
    for (auto _ : state) {
        auto alphas = scan::map_ordered<int>(
            graphs.size(), [&](std::size_t i) { return independence_number(graphs[i]); }, opt);
        benchmark::DoNotOptimize(alphas);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(graphs.size()));
}

void enumeration(benchmark::State& state, bool parallel) {
    EnumerationOptions opt;
    opt.scan.parallel = parallel;
    for (auto _ : state) {
        auto graphs = all_graphs(7, opt);
        benchmark::DoNotOptimize(graphs);
    }
}

}  // namespace

BENCHMARK_CAPTURE(spectral_scan, serial, false);
BENCHMARK_CAPTURE(spectral_scan, openmp, true);
BENCHMARK_CAPTURE(independence_scan, serial, false);
BENCHMARK_CAPTURE(independence_scan, openmp, true);
BENCHMARK_CAPTURE(enumeration, serial, false);
BENCHMARK_CAPTURE(enumeration, openmp, true);

BENCHMARK_MAIN();
