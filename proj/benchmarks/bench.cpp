#include <benchmark/benchmark.h>

#include "partlab/partlab.hpp"

namespace {

using namespace partlab;

void bm_enumerate(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long total = 0;
        for (int k = 0; k <= n; ++k) total += enumerate_segments(k, n, {}, true).size();
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(bm_enumerate)->Arg(8)->Arg(10);

void bm_meet_restrict(benchmark::State& state) {
    InfinitePartition m = meet(InfinitePartition::intervals({2}), InfinitePartition::intervals({3}));
    int h = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(m.restrict_to(h));
}
BENCHMARK(bm_meet_restrict)->Arg(64)->Arg(256);

void bm_pushforward_restrict(benchmark::State& state) {
    InfinitePartition p = pushforward(Surjection::halving(), InfinitePartition::intervals({4}));
    int h = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(p.restrict_to(h));
}
BENCHMARK(bm_pushforward_restrict)->Arg(64)->Arg(256);

void bm_dr_search(benchmark::State& state) {
    Coloring pi = lemma1_coloring(Surjection::halving());
    InfinitePartition base = InfinitePartition::singletons();
    for (auto _ : state)
        benchmark::DoNotOptimize(dr_witness_search(pi, base, static_cast<int>(state.range(0)), 4));
}
BENCHMARK(bm_dr_search)->Arg(7)->Arg(8);

void bm_fil_membership(benchmark::State& state) {
    FilterGens f(FilterGens::Mode::Star,
                 {InfinitePartition::intervals({2}), InfinitePartition::intervals({3})});
    InfinitePartition q = InfinitePartition::intervals({6});
    for (auto _ : state) benchmark::DoNotOptimize(f.member(q, static_cast<int>(state.range(0))));
}
BENCHMARK(bm_fil_membership)->Arg(32)->Arg(64);

void bm_coarser_periodic(benchmark::State& state) {
    InfinitePartition a = meet(InfinitePartition::intervals({2}), InfinitePartition::intervals({3}));
    InfinitePartition b = InfinitePartition::intervals({6});
    for (auto _ : state) benchmark::DoNotOptimize(is_coarser(a, b, static_cast<int>(state.range(0))));
}
BENCHMARK(bm_coarser_periodic)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
