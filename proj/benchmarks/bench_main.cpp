#include <benchmark/benchmark.h>

#include "greenscan/stability.hpp"
#include "greenscan/submodules.hpp"
#include "greenscan/tautilt.hpp"
#include "greenscan/universe.hpp"
#include "greenscan/zoo.hpp"

using namespace greenscan;

static void BM_KroneckerCatalog(benchmark::State& state) {
  const auto alg = zoo::kronecker();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_indec_tau_rigid(alg, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_KroneckerCatalog)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_LinearAExchangeGraph(benchmark::State& state) {
  const auto alg = parse_algebra(zoo::linear_a_text(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    TauContext ctx(alg, TauBounds{4});
    benchmark::DoNotOptimize(exchange_graph(ctx));
  }
}
BENCHMARK(BM_LinearAExchangeGraph)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_A3Mgs(benchmark::State& state) {
  TauContext ctx(parse_algebra(zoo::linear_a_text(3)), TauBounds{4});
  const auto graph = exchange_graph(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_mgs(graph, 16));
}
BENCHMARK(BM_A3Mgs);

static void BM_SubmoduleLattice(benchmark::State& state) {
  const auto universe = enumerate_indecomposables(zoo::kronecker(), UniverseBounds{3});
  const Representation& m = universe.modules.back();
  for (auto _ : state) benchmark::DoNotOptimize(submodules(m));
  state.SetLabel(std::to_string(m.total_dim()) + "-dimensional module");
}
BENCHMARK(BM_SubmoduleLattice)->Unit(benchmark::kMicrosecond);

static void BM_MarkovUniverse(benchmark::State& state) {
  const auto alg = zoo::markov();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_indecomposables(alg, UniverseBounds{2}));
}
BENCHMARK(BM_MarkovUniverse)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
