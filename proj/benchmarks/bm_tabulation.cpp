#include <wbt/arith_tab.hpp>

#include <benchmark/benchmark.h>

static void BM_SegmentFill(benchmark::State& state)
{
    const auto len = static_cast<std::uint64_t>(state.range(0));
    const std::uint64_t base = 1'000'000'000;
    wbt::SegmentTabulator tab(base + len);
    wbt::Segment seg;
    for (auto _ : state) {
        tab.fill(base, len, seg);
        benchmark::DoNotOptimize(seg.phi.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(len));
}
BENCHMARK(BM_SegmentFill)->Arg(1 << 16)->Arg(1 << 20)->Arg(1 << 22)->Unit(benchmark::kMillisecond);

static void BM_Tabulate(benchmark::State& state)
{
    const auto hi = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(wbt::tabulate(1, hi));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(hi));
}
BENCHMARK(BM_Tabulate)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

static void BM_SquarefreeCount(benchmark::State& state)
{
    const auto z = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(wbt::squarefree_count(z));
}
BENCHMARK(BM_SquarefreeCount)->Arg(1'000'000)->Arg(100'000'000)->Unit(benchmark::kMillisecond);
