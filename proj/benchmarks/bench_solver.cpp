#include "gsr/solver.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_FactorizeAndSolve(benchmark::State& state) {
    auto k = gsr::assemble(gsr::ChangePointModel::gsr(0.5), gsr::Method::CollocationHat,
                           static_cast<std::size_t>(state.range(0)), 74.76);
    for (auto _ : state) benchmark::DoNotOptimize(gsr::solve_arl(k).coeffs().front());
}
BENCHMARK(BM_FactorizeAndSolve)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMillisecond);

void BM_IteratedEvaluation(benchmark::State& state) {
    auto k = gsr::assemble(gsr::ChangePointModel::gsr(0.5), gsr::Method::CollocationHat,
                           static_cast<std::size_t>(state.range(0)), 74.76);
    auto arl = gsr::solve_arl(k);
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(arl(x));
        x = x > 74.0 ? 0.0 : x + 0.37;
    }
}
BENCHMARK(BM_IteratedEvaluation)->Arg(256)->Arg(4096);

void BM_SurvivalSeries(benchmark::State& state) {
    auto k = gsr::assemble(gsr::ChangePointModel::gsr(1.0), gsr::Method::CollocationHat, 256, 56.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gsr::survival_series(k, 0.0, 1e-300, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_SurvivalSeries)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
