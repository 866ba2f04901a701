// End-to-end arrangement time on representative synthetic graphs.

#include <benchmark/benchmark.h>

#include "logarr/params.hpp"
#include "logarr/solver.hpp"
#include "logarr/synthetic.hpp"

namespace {

void BM_SolvePa(benchmark::State& state) {
  const logarr::Graph g = logarr::make_preferential(
      static_cast<logarr::NodeId>(state.range(0)), 3, 1);
  const logarr::SolverParams params;
  double beta = 0.0;
  for (auto _ : state) {
    const logarr::SolveResult res = logarr::solve(g, params);
    beta = res.beta;
    benchmark::DoNotOptimize(res.cost);
  }
  state.counters["beta"] = beta;
  state.SetItemsProcessed(
      state.iterations() *
      static_cast<std::int64_t>(g.num_nodes() + g.num_edges()));
}

void BM_SolveGrid(benchmark::State& state) {
  const auto side = static_cast<logarr::NodeId>(state.range(0));
  const logarr::Graph g = logarr::make_grid(side, side);
  const logarr::SolverParams params;
  double beta = 0.0;
  for (auto _ : state) {
    const logarr::SolveResult res = logarr::solve(g, params);
    beta = res.beta;
    benchmark::DoNotOptimize(res.cost);
  }
  state.counters["beta"] = beta;
}

}  // namespace

BENCHMARK(BM_SolvePa)->Arg(1 << 12)->Arg(1 << 15)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveGrid)->Arg(64)->Arg(160)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
