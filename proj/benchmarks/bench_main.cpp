#include <benchmark/benchmark.h>

#include <cmath>

#include "flexmotion/analysis.hpp"
#include "flexmotion/signal.hpp"
#include "flexmotion/simulate.hpp"

using namespace flexmotion;

static void BM_SampleUniform(benchmark::State& state) {
  const auto spec = make_spec(0.41, 5.78, 2, 0.09);
  const double rate = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_uniform(spec, rate));
}
BENCHMARK(BM_SampleUniform)->Arg(1500)->Arg(9000);

static void BM_IntegrateRK4(benchmark::State& state) {
  const auto spec = make_spec(0.41, 5.78, state.range(0), 0.09);
  for (auto _ : state) benchmark::DoNotOptimize(integrate(spec));
}
BENCHMARK(BM_IntegrateRK4)->Arg(2)->Arg(10);

static void BM_ResidualClosedForm(benchmark::State& state) {
  const auto spec = make_spec(0.41, 5.78, 2.5, 0.09, PlanMode::exploratory);
  for (auto _ : state) {
    benchmark::DoNotOptimize(relative_closed_form(spec, spec.t1()));
  }
}
BENCHMARK(BM_ResidualClosedForm);

static void BM_Sweep(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep_n(0.41, 5.78, 0.09, 2.0, 4.0, 0.25));
  }
}
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);

static void BM_Filtfilt(benchmark::State& state) {
  const auto design = design_butterworth(4, 20.0, 9000.0);
  TimeSeries s;
  s.rate = 9000.0;
  for (int i = 0; i < state.range(0); ++i) s.values.push_back(std::sin(0.01 * i));
  for (auto _ : state) benchmark::DoNotOptimize(filtfilt(design, s));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Filtfilt)->Arg(1 << 12)->Arg(1 << 16);

BENCHMARK_MAIN();
