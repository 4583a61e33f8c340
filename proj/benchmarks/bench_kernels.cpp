#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "kglab/darboux.hpp"
#include "kglab/dynamics.hpp"
#include "kglab/initial_data.hpp"
#include "kglab/poschl_teller.hpp"
#include "kglab/spectral.hpp"

using namespace kglab;

namespace {

Grid grid_for(const benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  return Grid::make(80.0 * static_cast<double>(n) / 4096.0, n);
}

void BM_Multiplier(benchmark::State& state) {
  const Grid g = grid_for(state);
  const Spectral sp(g);
  const RealVector u = g.sample([](double x) { return std::exp(-x * x); });
  for (auto _ : state) benchmark::DoNotOptimize(sp.japanese(u, -1.0));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Multiplier)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

void step_bench(benchmark::State& state, Integrator integ) {
  const Grid g = grid_for(state);
  const Spectral sp(g);
  const SolitonFrame fr = SolitonFrame::build(g);
  const InitialData data = build_initial_data(sp, fr, DataSpec{});
  SolverConfig c;
  c.dt = 0.01;
  c.integrator = integ;
  c.enforce_box_rule = false;
  Evolver ev(fr, c);
  ev.load(make_initial_state(fr, data.phi0, data.phi1, 0.0));
  for (auto _ : state) {
    ev.step();
    // Stay well inside the trapped regime; reload before growth matters.
    if (ev.time() > 5.0) {
      state.PauseTiming();
      ev.load(make_initial_state(fr, data.phi0, data.phi1, 0.0));
      state.ResumeTiming();
    }
  }
}

void BM_StrangStep(benchmark::State& state) { step_bench(state, Integrator::Strang); }
void BM_Etdrk4Step(benchmark::State& state) { step_bench(state, Integrator::Etdrk4); }
BENCHMARK(BM_StrangStep)->Arg(1 << 12)->Arg(1 << 14);
BENCHMARK(BM_Etdrk4Step)->Arg(1 << 12)->Arg(1 << 14);

void BM_I1Apply(benchmark::State& state) {
  const Grid g = grid_for(state);
  const RealVector f = g.sample([](double x) { return x * std::exp(-x * x); });
  for (auto _ : state) benchmark::DoNotOptimize(i1_apply(g, f));
}
BENCHMARK(BM_I1Apply)->Arg(1 << 12)->Arg(1 << 14);

void BM_DistortedFt(benchmark::State& state) {
  const Grid g = grid_for(state);
  const SolitonFrame fr = SolitonFrame::build(g);
  RealVector src(g.size());
  for (std::size_t j = 0; j < src.size(); ++j) src[j] = 3.0 * fr.Q[j] * fr.Y2[j] * fr.Y2[j];
  for (auto _ : state) benchmark::DoNotOptimize(distorted_ft(g, src, std::numbers::sqrt3));
}
BENCHMARK(BM_DistortedFt)->Arg(1 << 12);

}  // namespace
BENCHMARK_MAIN();
