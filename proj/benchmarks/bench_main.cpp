#include <benchmark/benchmark.h>

#include <random>

#include "vuplink/harness.hpp"

namespace {

using namespace vuplink;

void BM_Erf(benchmark::State& state) {
    double x = -6.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(vuplink::erf(x));
        x = x > 6.0 ? -6.0 : x + 0.001;
    }
}
BENCHMARK(BM_Erf);

void BM_HopSuccessProb(benchmark::State& state) {
    const ChannelParams ch;
    double d = 1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hop_success_prob(d, ch));
        d = d > 200.0 ? 1.0 : d + 0.01;
    }
}
BENCHMARK(BM_HopSuccessProb);

VehiclePositions snapshot(double d0, std::size_t n) {
    std::mt19937_64 rng(n);
    std::uniform_real_distribution<double> pos(0.0, d0);
    VehiclePositions v;
    for (std::size_t i = 0; i < n; ++i) v.positions.push_back(pos(rng));
    std::sort(v.positions.begin(), v.positions.end());
    return v;
}

void BM_ParetoSelect(benchmark::State& state) {
    const Model model;
    const auto v = snapshot(150.0, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(pareto_select(v, 150.0, model));
}
BENCHMARK(BM_ParetoSelect)->Arg(4)->Arg(16)->Arg(64);

void BM_ExhaustiveSelect(benchmark::State& state) {
    const Model model;
    const auto v = snapshot(150.0, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(exhaustive_select(v, 150.0, model));
}
BENCHMARK(BM_ExhaustiveSelect)->Arg(4)->Arg(8)->Arg(12);

void BM_SweepPoint(benchmark::State& state) {
    auto cfg = default_config();
    cfg.sweep = {SweepVariable::D0, 100.0, 100.0, 1.0};
    cfg.trials = 1000;
    for (auto _ : state) benchmark::DoNotOptimize(run_distance_sweep(cfg));
}
BENCHMARK(BM_SweepPoint)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
