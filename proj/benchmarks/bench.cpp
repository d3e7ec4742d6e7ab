#include <benchmark/benchmark.h>

#include "rppc/crystal_graph.hpp"
#include "rppc/enumerate.hpp"
#include "rppc/reading.hpp"
#include "rppc/rpp_crystal.hpp"
#include "rppc/symfunc.hpp"
#include "rppc/word_crystal.hpp"

namespace {

using namespace rppc;

// the 7-row skew shape used throughout the worked examples
Filling large_fixture() {
    SkewShape shape({4, 4, 4, 4, 3, 3, 2}, {2, 1});
    std::vector<int> entries = {1, 2, 1, 1, 4, 1, 1, 1, 4, 1,
                                3, 3, 4, 2, 3, 5, 2, 4, 5, 3, 4};
    return Filling(shape, entries, 5);
}

void BM_EnumerateRpp(benchmark::State& state) {
    SkewShape shape({3, 2, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(count_rpp(shape, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateRpp)->Arg(3)->Arg(4);

void BM_GPolyExpand(benchmark::State& state) {
    SkewShape shape({3, 2, 1});
    for (auto _ : state) {
        auto expansion = expand_in_schur(g_poly(shape, 3), 3);
        benchmark::DoNotOptimize(expansion);
    }
}
BENCHMARK(BM_GPolyExpand);

void BM_CrystalGraph(benchmark::State& state) {
    SkewShape shape({2, 2});
    for (auto _ : state) {
        auto g = build_crystal_graph(shape, 3);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_CrystalGraph);

void BM_LowerLargeFixture(benchmark::State& state) {
    Filling t = large_fixture();
    for (auto _ : state) {
        auto lowered = lower_rpp(t, 3);
        benchmark::DoNotOptimize(lowered);
    }
}
BENCHMARK(BM_LowerLargeFixture);

void BM_ReadingRoundTrip(benchmark::State& state) {
    Filling t = large_fixture();
    for (auto _ : state) {
        auto back = reconstruct(t.shape(), reading_word(t), height_vector(t),
                                t.max_entry());
        benchmark::DoNotOptimize(back);
    }
}
BENCHMARK(BM_ReadingRoundTrip);

void BM_WordOperators(benchmark::State& state) {
    Word s = {1, 2, 2, 3, 1, 3, 2, 2, 2, 1, 3, 1, 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(raise_word(s, 1));
        benchmark::DoNotOptimize(lower_word(s, 2));
        benchmark::DoNotOptimize(is_lattice(s));
    }
}
BENCHMARK(BM_WordOperators);

} // namespace

BENCHMARK_MAIN();
