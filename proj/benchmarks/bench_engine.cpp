#include <benchmark/benchmark.h>

#include "chessarm/engine.hpp"

using namespace chessarm;

namespace {
const BoardModel kBoard(320, 40);
const ChessArm kArm(150, 200, 50);
}  // namespace

static void BM_ChessIk(benchmark::State& state) {
  const Point2 p = cell_center(kBoard, {3, 7});
  for (auto _ : state) benchmark::DoNotOptimize(chess_ik(kArm, p, IkMode::StandardTwoLink));
}
BENCHMARK(BM_ChessIk);

static void BM_MoveFrom(benchmark::State& state) {
  const ArmState start = init_state(kBoard, kArm, IkMode::StandardTwoLink);
  const Command cmd = MoveFrom{{-3, 1}, {4, 8}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(execute(start, cmd, kBoard, kArm, IkMode::StandardTwoLink));
  }
}
BENCHMARK(BM_MoveFrom);

static void BM_MoveFromSweep(benchmark::State& state) {
  const ArmState start = init_state(kBoard, kArm, IkMode::StandardTwoLink);
  const auto cells = BoardModel::cells();
  for (auto _ : state) {
    for (const Cell from : cells) {
      for (const Cell to : cells) {
        benchmark::DoNotOptimize(
            execute(start, MoveFrom{from, to}, kBoard, kArm, IkMode::StandardTwoLink));
      }
    }
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 64 * 64);
}
BENCHMARK(BM_MoveFromSweep)->Unit(benchmark::kMillisecond);
