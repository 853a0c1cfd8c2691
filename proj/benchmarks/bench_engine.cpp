#include <benchmark/benchmark.h>

#include "torushom/engine.hpp"
#include "torushom/hecke.hpp"
#include "torushom/torus.hpp"

namespace {

using namespace torushom;

void BM_ColumnInvariantCold(benchmark::State& state) {
  const TorusLinkSpec spec{static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)),
                           static_cast<std::size_t>(state.range(2)), Theory::Column};
  for (auto _ : state) {
    Engine engine;
    benchmark::DoNotOptimize(column_invariant(spec, engine));
  }
}
BENCHMARK(BM_ColumnInvariantCold)->Args({2, 3, 1})->Args({3, 4, 1})->Args({3, 5, 2})->Args({4, 5, 2})
    ->Unit(benchmark::kMillisecond);

void BM_ColumnInvariantWarm(benchmark::State& state) {
  const TorusLinkSpec spec{4, 5, 2, Theory::Column};
  Engine engine;
  column_invariant(spec, engine);
  for (auto _ : state) benchmark::DoNotOptimize(column_invariant(spec, engine));
}
BENCHMARK(BM_ColumnInvariantWarm)->Unit(benchmark::kMicrosecond);

void BM_PlainEngine(benchmark::State& state) {
  const TorusLinkSpec spec{2, static_cast<std::size_t>(state.range(0)), 1, Theory::Column};
  for (auto _ : state) {
    Engine engine(EngineOptions{false});
    benchmark::DoNotOptimize(column_invariant(spec, engine));
  }
}
BENCHMARK(BM_PlainEngine)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_HeckeTorus(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(hecke::homfly_torus(m, n));
}
BENCHMARK(BM_HeckeTorus)->Args({2, 7})->Args({3, 5})->Args({4, 5})->Unit(benchmark::kMillisecond);

void BM_RatFuncProduct(benchmark::State& state) {
  const RatFunc a = column_unknot_closed_form(4);
  const RatFunc b = hrw_unknot(4);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_RatFuncProduct);

}  // namespace

BENCHMARK_MAIN();
