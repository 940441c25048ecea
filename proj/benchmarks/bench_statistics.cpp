#include <benchmark/benchmark.h>

#include "mergm/network.hpp"
#include "mergm/rng.hpp"
#include "mergm/statistics.hpp"

using namespace mergm;

namespace {

MultilevelNetwork make_network(int n_actors, int n_objects, std::uint64_t seed) {
    MultilevelNetwork net(n_actors, n_objects);
    Rng rng(seed);
    for (TieLevel level : {TieLevel::A, TieLevel::B, TieLevel::X}) {
        const double p = level == TieLevel::B ? 0.15 : 0.3;
        for (const DyadRef& dyad : net.toggleable_dyads(level))
            if (rng.next_double() < p) net.toggle(dyad);
    }
    return net;
}

ModelSpec paper_style_model() {
    // roughly the shape of a full fit: within-level structure on all three
    // levels plus the cross-level closure terms
    return ModelSpec({{StatId::EdgeA},
                      {StatId::ASA},
                      {StatId::ATA},
                      {StatId::EdgeB},
                      {StatId::ASB},
                      {StatId::ATB},
                      {StatId::XEdge},
                      {StatId::XASA},
                      {StatId::XASB},
                      {StatId::XStar2B},
                      {StatId::Alt4CycleA},
                      {StatId::Star2AX},
                      {StatId::TriangleXAX},
                      {StatId::TriangleXBX},
                      {StatId::L3XBX},
                      {StatId::C4AXB}},
                     {TieLevel::A, TieLevel::B, TieLevel::X});
}

void BM_StatisticVector(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    MultilevelNetwork net = make_network(n, n, 1);
    ModelSpec model = paper_style_model();
    for (auto _ : state) {
        StatVector z = statistic_vector(net, model);
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_StatisticVector)->Arg(13)->Arg(39)->Arg(80);

void BM_ChangeStatistics(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    MultilevelNetwork net = make_network(n, n, 2);
    ModelSpec model = paper_style_model();
    std::vector<DyadRef> dyads;
    for (TieLevel level : {TieLevel::A, TieLevel::B, TieLevel::X}) {
        auto d = net.toggleable_dyads(level);
        dyads.insert(dyads.end(), d.begin(), d.end());
    }
    std::size_t at = 0;
    for (auto _ : state) {
        StatVector dz = change_statistics(net, dyads[at], model);
        benchmark::DoNotOptimize(dz);
        at = (at + 1) % dyads.size();
    }
}
BENCHMARK(BM_ChangeStatistics)->Arg(13)->Arg(39)->Arg(80);

void BM_ChangeVsRecompute(benchmark::State& state) {
    // the full-recount alternative the incremental path replaces
    const int n = static_cast<int>(state.range(0));
    MultilevelNetwork net = make_network(n, n, 3);
    ModelSpec model = paper_style_model();
    std::vector<DyadRef> dyads = net.toggleable_dyads(TieLevel::X);
    std::size_t at = 0;
    for (auto _ : state) {
        StatVector before = statistic_vector(net, model);
        net.toggle(dyads[at]);
        StatVector after = statistic_vector(net, model);
        net.toggle(dyads[at]);
        benchmark::DoNotOptimize(after);
        at = (at + 1) % dyads.size();
    }
}
BENCHMARK(BM_ChangeVsRecompute)->Arg(13)->Arg(39);

}  // namespace
