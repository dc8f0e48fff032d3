#include <benchmark/benchmark.h>

#include <random>

#include "chessarm/kinematics.hpp"
#include "chessarm/workspace.hpp"

using namespace chessarm;

static void BM_FkPlanar(benchmark::State& state) {
  const PlanarArm arm(0.5, 1.2, 0.8);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  const AnglePair a{ang(rng), ang(rng)};
  for (auto _ : state) benchmark::DoNotOptimize(fk_planar(arm, a));
}
BENCHMARK(BM_FkPlanar);

static void BM_IkPlanar(benchmark::State& state) {
  const PlanarArm arm(0.5, 1.2, 0.8);
  const Point2 t{1.1, 0.7};
  for (auto _ : state) benchmark::DoNotOptimize(ik_planar(arm, t, ElbowBranch::Up));
}
BENCHMARK(BM_IkPlanar);

static void BM_SampleWorkspace(benchmark::State& state) {
  const PlanarArm arm(0, 1, 1);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_workspace(arm, n));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0) *
                          state.range(0));
}
BENCHMARK(BM_SampleWorkspace)->Arg(50)->Arg(200);

static void BM_Coverage(benchmark::State& state) {
  const PlanarArm arm(0, 1, 1);
  const WorkspaceCloud cloud = sample_workspace(arm, 200);
  const double cell = default_cell_size(arm, 200);
  for (auto _ : state) benchmark::DoNotOptimize(occupancy_area(cloud, cell));
}
BENCHMARK(BM_Coverage);
