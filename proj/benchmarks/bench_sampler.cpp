#include <benchmark/benchmark.h>

#include "mergm/sampler.hpp"

using namespace mergm;

namespace {

void BM_MhSteps(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    ModelSpec model({{StatId::EdgeA}, {StatId::ASA}, {StatId::ATA}, {StatId::XEdge},
                     {StatId::TriangleXAX}},
                    {TieLevel::A, TieLevel::X});
    MarkovChain chain(MultilevelNetwork(n, n / 2), model, {-1.5, 0.3, 0.4, -1.0, 0.2}, 7);
    for (auto _ : state) benchmark::DoNotOptimize(chain.step());
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_MhSteps)->Arg(13)->Arg(39)->Arg(80);

void BM_SimulateSample(benchmark::State& state) {
    ModelSpec model({{StatId::EdgeA}, {StatId::ASA}, {StatId::ATA}}, {TieLevel::A});
    ChainConfig cfg;
    cfg.burn_in = 1000;
    cfg.thinning = 10;
    cfg.sample_size = 100;
    cfg.seed = 11;
    for (auto _ : state) {
        SampleSummary s = simulate_sample(MultilevelNetwork(20, 0), {-2.0, 0.4, 0.5}, model, cfg);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_SimulateSample);

void BM_ExactEnumerate(benchmark::State& state) {
    ModelSpec model({{StatId::EdgeA}, {StatId::EdgeB}, {StatId::XEdge}, {StatId::TriangleXAX}},
                    {TieLevel::A, TieLevel::B, TieLevel::X});
    const Theta theta = {0.2, -0.1, 0.1, 0.3};
    for (auto _ : state) {
        ExactDistribution d = exact_enumerate(MultilevelNetwork(3, 2), model, theta);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_ExactEnumerate);

}  // namespace

BENCHMARK_MAIN();
