#include "chigap/coloring.hpp"
#include "chigap/enumerate.hpp"
#include "chigap/extremal.hpp"
#include "chigap/graph.hpp"
#include "chigap/random.hpp"

#include <benchmark/benchmark.h>

using namespace chigap;

namespace {

Graph complete(int n) {
    return build_decorated(CoreKind::complete, n, {});
}

Graph petersen() {
    return Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                  {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                                  {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

}  // namespace

static void BM_ChromaticComplete(benchmark::State& state) {
    Graph g = complete(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g).chi);
}
BENCHMARK(BM_ChromaticComplete)->Arg(6)->Arg(8)->Arg(10);

static void BM_ChromaticPetersen(benchmark::State& state) {
    Graph g = petersen();
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g).chi);
}
BENCHMARK(BM_ChromaticPetersen);

static void BM_ChromaticRandom(benchmark::State& state) {
    SplitMix64 rng(7);
    Graph g = random_graph(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g).chi);
}
BENCHMARK(BM_ChromaticRandom)->Arg(12)->Arg(16)->Arg(20);

static void BM_ChromaticDecoratedOddCycle(benchmark::State& state) {
    SplitMix64 rng(11);
    Graph g = random_decorated(CoreKind::cycle, 9, 20, rng);
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g).chi);
}
BENCHMARK(BM_ChromaticDecoratedOddCycle);

static void BM_GapPetersen(benchmark::State& state) {
    Graph g = petersen();
    for (auto _ : state) benchmark::DoNotOptimize(gap(g).gap);
}
BENCHMARK(BM_GapPetersen);
