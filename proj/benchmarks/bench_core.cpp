#include <benchmark/benchmark.h>

#include "curveform/campaign.hpp"

using namespace curveform;

namespace {

CurveModel unit_square(double cell = 0.0) {
  return CurveModel::build({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, cell);
}

void BM_IntervalShift(benchmark::State& state) {
  const MultiInterval m(4.0, {{-1.9, -1.7}, {0.3, 0.5}, {1.8, 1.95}});
  const Interval shift(0.1, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(m.shifted(shift));
}
BENCHMARK(BM_IntervalShift);

void BM_IntervalIntersect(benchmark::State& state) {
  const MultiInterval a(4.0, {{-1.9, -1.0}, {0.3, 0.5}, {1.0, 1.95}});
  const MultiInterval b(4.0, {{-1.5, 0.4}, {0.45, 1.2}});
  for (auto _ : state) benchmark::DoNotOptimize(a.intersected(b));
}
BENCHMARK(BM_IntervalIntersect);

void BM_EnvelopeBuild(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(unit_square(4.0 / state.range(0)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnvelopeBuild)->Arg(500)->Arg(2000)->Arg(4000)->Complexity();

void BM_InvertMeasured(benchmark::State& state) {
  const CurveModel sq = unit_square();
  for (auto _ : state)
    benchmark::DoNotOptimize(sq.invert_measured({0.19, 0.21}));
}
BENCHMARK(BM_InvertMeasured);

void BM_SimulationSteps(benchmark::State& state) {
  const CurveModel sq = unit_square();
  SimConfig c;
  c.horizon = static_cast<int>(state.range(0));
  c.seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_simulation(sq, c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulationSteps)->Arg(500)->Arg(5000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
