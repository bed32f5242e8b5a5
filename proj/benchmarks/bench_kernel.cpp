#include "gsr/kernel.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_AssembleHat(benchmark::State& state) {
    auto m = gsr::ChangePointModel::gsr(0.5);
    auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gsr::assemble(m, gsr::Method::CollocationHat, n, 74.76));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AssembleHat)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMillisecond)->Complexity();

void BM_AssembleMidpoint(benchmark::State& state) {
    auto m = gsr::ChangePointModel::gsr(0.5);
    auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gsr::assemble(m, gsr::Method::Midpoint, n, 74.76));
}
BENCHMARK(BM_AssembleMidpoint)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMillisecond);

}  // namespace
