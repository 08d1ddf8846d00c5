#include <wbt/campaign.hpp>

#include <benchmark/benchmark.h>

static void BM_CampaignSweep(benchmark::State& state)
{
    wbt::CampaignConfig cfg;
    cfg.z_min = 50;
    cfg.z_max = static_cast<std::uint64_t>(state.range(0));
    cfg.checkpoint_stride = 1'000'000;
    cfg.threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(wbt::run_campaign(cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CampaignSweep)->Args({2'000'000, 1})->Args({2'000'000, 4})->UseRealTime()->Unit(benchmark::kMillisecond);

static void BM_TestInequality(benchmark::State& state)
{
    double Y = 1e10;
    for (auto _ : state) {
        benchmark::DoNotOptimize(wbt::test_inequality(Y, 12.0, 1e5, 9592));
        Y += 1.0;
    }
}
BENCHMARK(BM_TestInequality);
