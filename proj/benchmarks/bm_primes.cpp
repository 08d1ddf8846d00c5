#include <wbt/prime_sums.hpp>
#include <wbt/primes.hpp>

#include <benchmark/benchmark.h>

static void BM_PrimeRangeCount(benchmark::State& state)
{
    const auto lo = static_cast<std::uint64_t>(state.range(0));
    const std::uint64_t width = 1'000'000;
    for (auto _ : state)
        benchmark::DoNotOptimize(wbt::PrimeRange(lo, lo + width).count());
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(width));
}
BENCHMARK(BM_PrimeRangeCount)->Arg(2)->Arg(1'000'000'000)->Arg(1'000'000'000'000)->Unit(benchmark::kMillisecond);

static void BM_WeightedPrimeSum(benchmark::State& state)
{
    const auto f = wbt::builtin(wbt::Shape::smooth_bump_approx, wbt::Interval(1e9, 1e5), 64);
    for (auto _ : state)
        benchmark::DoNotOptimize(wbt::weighted_prime_sum(f, 12, 5));
}
BENCHMARK(BM_WeightedPrimeSum)->Unit(benchmark::kMillisecond);
