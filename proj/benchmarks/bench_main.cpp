#include <benchmark/benchmark.h>

#include "wsnchase/harness.hpp"
#include "wsnchase/policies.hpp"
#include "wsnchase/simulation.hpp"

namespace {

using namespace wsnchase;

DecisionContext full_grid_ctx(MovementMode mode) {
  return {{100, 100}, {140, 60}, {5, 5}, {2, mode}, {1, mode}, {200, 200}, std::nullopt};
}

void BM_CatchArea(benchmark::State& state) {
  const auto ctx = full_grid_ctx(static_cast<MovementMode>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(catch_area(ctx));
}
BENCHMARK(BM_CatchArea)->Arg(static_cast<int>(MovementMode::AxisOnly))->Arg(static_cast<int>(MovementMode::ManhattanBall));

void BM_DirectionProbabilities(benchmark::State& state) {
  const auto ctx = full_grid_ctx(static_cast<MovementMode>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(direction_probabilities(ctx));
}
BENCHMARK(BM_DirectionProbabilities)
    ->Arg(static_cast<int>(MovementMode::AxisOnly))
    ->Arg(static_cast<int>(MovementMode::ManhattanBall));

void BM_Simulate(benchmark::State& state) {
  SimConfig cfg;
  cfg.policy = Policy::make(static_cast<PolicyKind>(state.range(0)), Threshold::parse("0.2"));
  cfg.track = resolve_track(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(simulate(cfg).record);
  state.SetLabel(std::string(to_string(cfg.policy.kind())));
}
BENCHMARK(BM_Simulate)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
