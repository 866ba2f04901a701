#include "logarr/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "logarr/baselines.hpp"
#include "logarr/error.hpp"
#include "logarr/placement.hpp"
#include "logarr/rng.hpp"

namespace logarr {

std::vector<PlacementErrorSample> placement_error_experiment(
    const Graph& g, std::uint64_t seed, std::size_t max_instances,
    NodeId max_degree) {
  const Arrangement a = baseline(g, BaselineKind::kRandom, seed);
  const auto coords = a.coords();

  std::vector<NodeId> nodes(g.num_nodes());
  for (NodeId i = 0; i < g.num_nodes(); ++i) nodes[i] = i;
  Rng pick(mix_seed(seed, 1));
  pick.shuffle(nodes);

  std::vector<PlacementErrorSample> out;
  NeighborSample sample;
  for (NodeId i : nodes) {
    if (out.size() >= max_instances) break;
    const auto nbrs = g.neighbors(i);
    if (nbrs.size() < 2 || nbrs.size() > static_cast<std::size_t>(max_degree))
      continue;
    const auto ws = g.incident_weights(i);
    sample.clear();
    for (std::size_t t = 0; t < nbrs.size(); ++t)
      sample.add(coords[nbrs[t]], ws[t]);
    sample.sort_ascending();

    // Index picked by the density rule: argmax of the estimated density,
    // ties to the smaller position (same policy as place_density).
    const std::vector<double> density =
        estimate_density(sample, density_bandwidth(sample));
    std::size_t density_pick = 0;
    for (std::size_t t = 1; t < density.size(); ++t)
      if (density[t] > density[density_pick]) density_pick = t;

    double exact_energy = candidate_energy(sample, 0);
    for (std::size_t k = 1; k < sample.size(); ++k)
      exact_energy = std::min(exact_energy, candidate_energy(sample, k));
    const double density_energy = candidate_energy(sample, density_pick);
    const double err = density_energy - exact_energy;
    out.push_back({err, err / (std::fabs(exact_energy) + 1.0)});
  }
  return out;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw ContractViolation("loglog_slope: need >= 2 paired points");
  const std::size_t n = x.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] <= 0.0 || y[i] <= 0.0)
      throw ValidationError("loglog_slope: inputs must be positive");
    mx += std::log2(x[i]);
    my += std::log2(y[i]);
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = std::log2(x[i]) - mx;
    sxy += dx * (std::log2(y[i]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0.0) throw ValidationError("loglog_slope: degenerate x values");
  return sxy / sxx;
}

}  // namespace logarr
