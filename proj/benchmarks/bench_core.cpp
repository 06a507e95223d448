// bench_core.cpp - Micro benchmarks for the steady-state pipeline

#include <benchmark/benchmark.h>

#include <ness/ness.hpp>

using namespace ness;

namespace {

OscillatorParams sample_params()
{
    OscillatorParams p;
    p.omega_a = 0.8;
    p.G = 0.3;
    p.kappa_a = 0.5;
    p.kappa_b = 1.0;
    p.N_a = 2.0;
    p.N_b = 5.0;
    return p;
}

void BM_Lyapunov(benchmark::State& state)
{
    const auto p = sample_params();
    const Mat4 a = build_drift(p), d = build_diffusion(p);
    for (auto _ : state) benchmark::DoNotOptimize(lyapunov_steady_state(a, d));
}
BENCHMARK(BM_Lyapunov);

void BM_SymplecticEigenvalues(benchmark::State& state)
{
    const auto s = lyapunov_steady_state(sample_params());
    for (auto _ : state) benchmark::DoNotOptimize(symplectic_eigenvalues(s.matrix()));
}
BENCHMARK(BM_SymplecticEigenvalues);

void BM_EntropyProduction(benchmark::State& state)
{
    const auto p = sample_params();
    for (auto _ : state) benchmark::DoNotOptimize(stationary_entropy_production(p));
}
BENCHMARK(BM_EntropyProduction);

void BM_DiscordClosedForm(benchmark::State& state)
{
    const auto s = lyapunov_steady_state(sample_params());
    for (auto _ : state) benchmark::DoNotOptimize(discord_closed_form(s));
}
BENCHMARK(BM_DiscordClosedForm);

void BM_DiscordNumeric(benchmark::State& state)
{
    const auto s = lyapunov_steady_state(sample_params());
    for (auto _ : state) benchmark::DoNotOptimize(discord_numeric(s));
}
BENCHMARK(BM_DiscordNumeric);

void BM_SteadyStateReport(benchmark::State& state)
{
    const auto p = sample_params();
    for (auto _ : state) benchmark::DoNotOptimize(analyze_steady_state(p));
}
BENCHMARK(BM_SteadyStateReport);

void BM_Sampler(benchmark::State& state)
{
    SampleSpec spec;
    spec.count = 2000;
    const auto workers = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sample_steady_states(spec, workers));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(spec.count));
}
BENCHMARK(BM_Sampler)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace

BENCHMARK_MAIN();
