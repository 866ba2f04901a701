// Relaxation-sweep throughput on preferential-attachment graphs.

#include <benchmark/benchmark.h>

#include "logarr/algebraic_distance.hpp"
#include "logarr/graph.hpp"
#include "logarr/rng.hpp"
#include "logarr/synthetic.hpp"

namespace {

void BM_JorSweep(benchmark::State& state) {
  const logarr::Graph g = logarr::make_preferential(
      static_cast<logarr::NodeId>(state.range(0)), 3, 1);
  const logarr::LaplacianView lap = logarr::laplacian(g);
  logarr::Rng rng(1);
  std::vector<double> chi(g.num_nodes());
  for (double& x : chi) x = rng.uniform01() - 0.5;
  for (auto _ : state) {
    chi = logarr::jor_sweep(lap, chi, 0.5);
    benchmark::DoNotOptimize(chi.data());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(g.num_nodes()));
}

void BM_Couplings(benchmark::State& state) {
  const logarr::Graph g = logarr::make_preferential(
      static_cast<logarr::NodeId>(state.range(0)), 3, 1);
  logarr::CouplingParams params;
  for (auto _ : state) {
    logarr::CouplingMap rho = logarr::compute_couplings(g, params);
    benchmark::DoNotOptimize(rho.rho.data());
  }
}

}  // namespace

BENCHMARK(BM_JorSweep)->Arg(1 << 14)->Arg(1 << 17)->Arg(1 << 20);
BENCHMARK(BM_Couplings)->Arg(1 << 12)->Arg(1 << 15);

BENCHMARK_MAIN();
