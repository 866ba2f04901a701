// One-node placement: exact quadratic rule vs linear-pass density estimate.

#include <benchmark/benchmark.h>

#include <vector>

#include "logarr/placement.hpp"
#include "logarr/rng.hpp"

namespace {

logarr::NeighborSample random_sample(std::size_t k, std::uint64_t seed) {
  logarr::Rng rng(seed);
  std::vector<double> positions(k), weights(k);
  for (std::size_t i = 0; i < k; ++i) {
    positions[i] = rng.uniform01() * 1000.0;
    weights[i] = 0.5 + rng.uniform01();
  }
  return logarr::NeighborSample::of(std::move(positions), std::move(weights));
}

void BM_PlaceExact(benchmark::State& state) {
  logarr::NeighborSample s =
      random_sample(static_cast<std::size_t>(state.range(0)), 7);
  s.sort_ascending();
  for (auto _ : state)
    benchmark::DoNotOptimize(logarr::place_exact(s));
}

void BM_PlaceDensity(benchmark::State& state) {
  logarr::NeighborSample s =
      random_sample(static_cast<std::size_t>(state.range(0)), 7);
  s.sort_ascending();
  logarr::PlacementScratch scratch;
  for (auto _ : state)
    benchmark::DoNotOptimize(logarr::place_density(s, scratch));
}

}  // namespace

BENCHMARK(BM_PlaceExact)->Arg(8)->Arg(32)->Arg(128)->Arg(512);
BENCHMARK(BM_PlaceDensity)->Arg(8)->Arg(32)->Arg(128)->Arg(512)->Arg(4096);

BENCHMARK_MAIN();
