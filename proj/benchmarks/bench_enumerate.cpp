#include "chigap/enumerate.hpp"
#include "chigap/graph.hpp"
#include "chigap/io.hpp"
#include "chigap/random.hpp"

#include <benchmark/benchmark.h>

using namespace chigap;

static void BM_TheoremSweepLabeled(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto rows = check_theorem(n, EnumMode::labeled, 1);
        benchmark::DoNotOptimize(rows.back().connected_count);
    }
}
BENCHMARK(BM_TheoremSweepLabeled)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_TheoremSweepUnlabeled(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto rows = check_theorem(n, EnumMode::unlabeled, 1);
        benchmark::DoNotOptimize(rows.back().connected_count);
    }
}
BENCHMARK(BM_TheoremSweepUnlabeled)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_CanonicalForm(benchmark::State& state) {
    SplitMix64 rng(3);
    Graph g = random_graph(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g).edge_count());
}
BENCHMARK(BM_CanonicalForm)->Arg(6)->Arg(8)->Arg(10);

static void BM_Graph6RoundTrip(benchmark::State& state) {
    SplitMix64 rng(4);
    Graph g = random_graph(32, rng);
    for (auto _ : state) {
        std::string line = to_graph6(g);
        benchmark::DoNotOptimize(from_graph6(line).edge_count());
    }
}
BENCHMARK(BM_Graph6RoundTrip);

BENCHMARK_MAIN();
