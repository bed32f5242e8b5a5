#include "gsr/oracle.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_SimulatePaths(benchmark::State& state) {
    gsr::SimulationOptions opt;
    opt.paths = static_cast<std::size_t>(state.range(0));
    auto m = gsr::ChangePointModel::gsr(1.0);
    for (auto _ : state) benchmark::DoNotOptimize(gsr::simulate_run_length(m, 56.0, 0.0, opt).arl.estimate);
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulatePaths)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_NormalVariate(benchmark::State& state) {
    gsr::SplitMix64 rng(1);
    for (auto _ : state) benchmark::DoNotOptimize(gsr::standard_normal(rng));
}
BENCHMARK(BM_NormalVariate);

}  // namespace
