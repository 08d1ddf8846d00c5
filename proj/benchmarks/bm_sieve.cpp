#include <wbt/arith_tab.hpp>
#include <wbt/sieve_core.hpp>

#include <benchmark/benchmark.h>

static void BM_SelbergLambda(benchmark::State& state)
{
    const auto z = static_cast<std::uint64_t>(state.range(0));
    const wbt::ArithTable tab = wbt::tabulate(1, z);
    const wbt::SieveParams p(6, 1, z);
    for (auto _ : state)
        benchmark::DoNotOptimize(wbt::selberg_lambda(p, tab));
}
BENCHMARK(BM_SelbergLambda)->Arg(300)->Arg(10'000)->Unit(benchmark::kMicrosecond);

static void BM_SelbergQuadraticForm(benchmark::State& state)
{
    const auto z = static_cast<std::uint64_t>(state.range(0));
    const wbt::ArithTable tab = wbt::tabulate(1, z);
    const auto w = wbt::selberg_lambda(wbt::SieveParams(1, 0, z), tab);
    for (auto _ : state)
        benchmark::DoNotOptimize(wbt::selberg_quadratic_form(w));
}
BENCHMARK(BM_SelbergQuadraticForm)->Arg(100)->Arg(300)->Unit(benchmark::kMicrosecond);

static void BM_SiftedSum(benchmark::State& state)
{
    const auto f = wbt::builtin(wbt::Shape::hat, wbt::Interval(1e6, 1e4), 1);
    const wbt::SieveParams p(3, 1, static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(wbt::sifted_sum(f, p));
}
BENCHMARK(BM_SiftedSum)->Arg(10)->Arg(50)->Unit(benchmark::kMicrosecond);
