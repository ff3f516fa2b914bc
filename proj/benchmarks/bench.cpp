#include <benchmark/benchmark.h>

#include "yw/energy.hpp"
#include "yw/graph.hpp"
#include "yw/path_model.hpp"
#include "yw/perfect_crystal.hpp"
#include "yw/walls.hpp"

namespace {

yw::Algebra algebraArg(const benchmark::State& state) {
  return state.range(0) == 0 ? yw::Algebra::E6_2 : yw::Algebra::F4_1;
}

const yw::PerfectCrystal& crystal(yw::Algebra a) {
  static const auto e6 = yw::PerfectCrystal::build(yw::Algebra::E6_2);
  static const auto f4 = yw::PerfectCrystal::build(yw::Algebra::F4_1);
  return a == yw::Algebra::E6_2 ? e6 : f4;
}

const yw::EnergyTable& energy(yw::Algebra a) {
  static const auto e6 = yw::computeEnergy(crystal(yw::Algebra::E6_2));
  static const auto f4 = yw::computeEnergy(crystal(yw::Algebra::F4_1));
  return a == yw::Algebra::E6_2 ? e6 : f4;
}

void BM_BuildCrystal(benchmark::State& state) {
  yw::Algebra a = algebraArg(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(yw::PerfectCrystal::build(a));
  }
}
BENCHMARK(BM_BuildCrystal)->Arg(0)->Arg(1);

void BM_ComputeEnergy(benchmark::State& state) {
  yw::Algebra a = algebraArg(state);
  const auto& b = crystal(a);
  for (auto _ : state) {
    benchmark::DoNotOptimize(yw::computeEnergy(b));
  }
}
BENCHMARK(BM_ComputeEnergy)->Arg(0)->Arg(1);

void BM_EnumerateReducedWalls(benchmark::State& state) {
  yw::Algebra a = algebraArg(state);
  yw::WallModelContext ctx{crystal(a), energy(a), yw::WallModel::Reduced};
  int depth = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto g = yw::enumerate(ctx, "reduced", ctx.ground(), yw::Direction::FOnly,
                           yw::EnumLimits{.maxDepth = depth});
    benchmark::DoNotOptimize(g.nodes.size());
  }
}
BENCHMARK(BM_EnumerateReducedWalls)
    ->Args({0, 4})
    ->Args({0, 6})
    ->Args({1, 4})
    ->Args({1, 6});

void BM_EnumeratePaths(benchmark::State& state) {
  yw::Algebra a = algebraArg(state);
  yw::PathModelContext ctx{crystal(a), energy(a)};
  int depth = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto g = yw::enumerate(ctx, "path", ctx.ground(), yw::Direction::FOnly,
                           yw::EnumLimits{.maxDepth = depth});
    benchmark::DoNotOptimize(g.nodes.size());
  }
}
BENCHMARK(BM_EnumeratePaths)->Args({0, 6})->Args({1, 6});

// One fixed lowering walk of the wall crystal, signature scans included.
void BM_WallOperatorWalk(benchmark::State& state) {
  yw::Algebra a = algebraArg(state);
  yw::WallModelContext ctx{crystal(a), energy(a), yw::WallModel::Reduced};
  for (auto _ : state) {
    yw::YoungWall w = ctx.ground();
    int steps = 0;
    for (int round = 0; round < 4 && steps < 12; ++round) {
      for (int i = 0; i < yw::kRank && steps < 12; ++i) {
        if (auto t = ctx.ftilde(w, i)) {
          w = *t;
          ++steps;
        }
      }
    }
    benchmark::DoNotOptimize(steps);
  }
}
BENCHMARK(BM_WallOperatorWalk)->Arg(0)->Arg(1);

void BM_PathExists(benchmark::State& state) {
  yw::Algebra a = algebraArg(state);
  const auto& b = crystal(a);
  for (auto _ : state) {
    bool r = yw::pathExists(b, {b.theta(), 0}, {b.empty(), 1});
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_PathExists)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
