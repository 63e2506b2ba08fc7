#include <benchmark/benchmark.h>

#include "tcw/approx.hpp"
#include "tcw/exact.hpp"
#include "tcw/instances.hpp"
#include "tcw/reduce.hpp"
#include "tcw/starcut.hpp"

using namespace tcw;

static void BM_width_hw_witness(benchmark::State& state) {
    const int w = static_cast<int>(state.range(0));
    auto g = gen_hw(w);
    auto d = hw_witness(w);
    for (auto _ : state) benchmark::DoNotOptimize(width(g, d).width);
}
BENCHMARK(BM_width_hw_witness)->Arg(4)->Arg(6)->Arg(8);

static void BM_width_bisection_witness(benchmark::State& state) {
    Multigraph c4;
    c4.add_edge(0, 1);
    c4.add_edge(1, 2);
    c4.add_edge(2, 3);
    c4.add_edge(0, 3);
    auto inst = gen_bisection_instance(c4, 2);  // ~17k vertices
    auto wit = bisection_witness(inst, {0, 1}, {2, 3});
    for (auto _ : state) benchmark::DoNotOptimize(width(inst.g, wit).width);
}
BENCHMARK(BM_width_bisection_witness)->Unit(benchmark::kMillisecond);

static void BM_approx_hw(benchmark::State& state) {
    const int w = static_cast<int>(state.range(0));
    auto g = gen_hw(w);
    for (auto _ : state) benchmark::DoNotOptimize(approx_tcw(g, w + 1).report.width);
}
BENCHMARK(BM_approx_hw)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_starcut_dp(benchmark::State& state) {
    auto g = gen_hw(static_cast<int>(state.range(0)));
    auto inst = make_instance(g.vertices(), g, static_cast<int>(state.range(0)) + 1);
    for (auto _ : state) benchmark::DoNotOptimize(solve(inst).has_value());
}
BENCHMARK(BM_starcut_dp)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_exact_oracle(benchmark::State& state) {
    auto g = gen_random(static_cast<int>(state.range(0)), 12, 2, 5);
    for (auto _ : state) benchmark::DoNotOptimize(exact_tcw(g).tcw);
}
BENCHMARK(BM_exact_oracle)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_reduce_split(benchmark::State& state) {
    auto g = gen_hw(6);
    for (auto _ : state) {
        auto [core, log] = reduce_degree(g);
        benchmark::DoNotOptimize(split_3ec(core, 2).pieces.size());
    }
}
BENCHMARK(BM_reduce_split);

BENCHMARK_MAIN();
