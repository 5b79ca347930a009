#include <cmath>

#include <benchmark/benchmark.h>

#include "pf/boxmode.hpp"
#include "pf/oracle.hpp"
#include "pf/oscillator.hpp"
#include "pf/timedep.hpp"
#include "pf/trajectory_oracle.hpp"
#include "pf/verify.hpp"

namespace {

pf::box::BoxMode box_mode() {
    return pf::box::make_mode(pf::box::system_for_ratio(pf::kConstants.electron_mass, 2e-9, 1, 1.5), 1);
}

void BM_AdaptiveQuadrature(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(pf::oracle::integrate([](double x) { return std::exp(-x * x) * std::cos(5.0 * x); }, -4.0, 4.0));
    }
}
BENCHMARK(BM_AdaptiveQuadrature);

void BM_BoxSeriesSweep(benchmark::State& state) {
    const auto mode = box_mode();
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pf::box::sample_trajectory(mode, pf::box::TrajectoryVariant::Series, n));
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * n));
}
BENCHMARK(BM_BoxSeriesSweep)->Arg(1000)->Arg(10000);

void BM_BoxOracleTrajectory(benchmark::State& state) {
    const auto mode = box_mode();
    const double x = 0.37 * mode.system.a;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pf::oracle::exact_box_trajectory(mode, x));
    }
}
BENCHMARK(BM_BoxOracleTrajectory);

void BM_OscillatorTrajectory(benchmark::State& state) {
    const auto sys0 = pf::osc::OscSystem::from_alpha(pf::osc::kHydrogenMoleculeMu, 1e20, 1e-9);
    const auto sys = pf::osc::OscSystem::from_alpha(sys0.mu, sys0.alpha, pf::osc::classical_threshold(sys0, 50));
    const auto mode = pf::osc::make_mode(sys, 1, 1e-10);
    const double r = 0.5 / std::sqrt(sys.alpha);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pf::osc::trajectory(mode, sys, r, pf::osc::SeriesOrder::ThreeTerm));
    }
}
BENCHMARK(BM_OscillatorTrajectory);

void BM_ContinuityResidual(benchmark::State& state) {
    const pf::box::BoxSystem sys{pf::kConstants.electron_mass, 2e-9, 0.0};
    const auto s = pf::timedep::Superposition::equal_weights(sys, {1, 2, 3});
    const double tb = pf::timedep::beat_period(s);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pf::timedep::continuity_residual(s, 0.4 * sys.a, 0.3 * tb, sys.a * 1e-4, tb * 1e-4));
    }
}
BENCHMARK(BM_ContinuityResidual);

void BM_FullVerification(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(pf::verify::run_verification());
    }
}
BENCHMARK(BM_FullVerification)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
