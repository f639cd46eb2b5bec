#include <benchmark/benchmark.h>

#include "brieskorn/dinv.hpp"
#include "brieskorn/plumbing.hpp"

using namespace brieskorn;

namespace {

// (p, 2p - 1) exists for every odd p, so the argument controls p directly.
Triple odd_triple(std::int64_t p) { return make_triple(p, 2 * p - 1); }

void BM_DRefined(benchmark::State& state) {
    const Triple t = odd_triple(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(d_refined(t).value);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DRefined)->Arg(101)->Arg(1001)->Arg(10'001)->Arg(100'001)->Arg(1'000'001)->Complexity(benchmark::oN);

void BM_DFull(benchmark::State& state) {
    const Triple t = odd_triple(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(d_full(t).value);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DFull)->Arg(101)->Arg(401)->Arg(1601)->Complexity(benchmark::oNSquared);

void BM_Classify(benchmark::State& state) {
    const Triple t = make_triple(89, 144);
    for (auto _ : state) benchmark::DoNotOptimize(classify(t).D);
}
BENCHMARK(BM_Classify);

void BM_Determinant(benchmark::State& state) {
    // q + r grows like 3p for (p, 2p - 1)
    const PlumbingGraph g = star_graph(odd_triple(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(determinant(g));
    state.SetComplexityN(static_cast<std::int64_t>(g.size()));
}
BENCHMARK(BM_Determinant)->Arg(101)->Arg(1001)->Arg(10'001)->Arg(100'001)->Complexity(benchmark::oN);

void BM_Enumerate(benchmark::State& state) {
    for (auto _ : state) {
        std::size_t n = 0;
        for_each_triple(state.range(0), [&](const Triple&) { ++n; });
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_Enumerate)->Arg(1000)->Arg(10'000);

void BM_EnumerateWithD(benchmark::State& state) {
    for (auto _ : state) {
        std::int64_t sum = 0;
        for_each_triple(state.range(0), [&](const Triple& t) { sum += d(t).value; });
        benchmark::DoNotOptimize(sum);
    }
}
BENCHMARK(BM_EnumerateWithD)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
