#include "logarr/algebraic_distance.hpp"

#include <cmath>

#include "logarr/error.hpp"
#include "logarr/rng.hpp"

namespace logarr {

namespace {

void jor_sweep_into(const Graph& g, std::span<const double> in,
                    std::span<double> out, double omega) {
  for (NodeId i = 0; i < g.num_nodes(); ++i) {
    const double d = g.weighted_degree(i);
    if (d <= 0.0) {
      out[i] = in[i];
      continue;
    }
    const auto nbrs = g.neighbors(i);
    const auto ws = g.incident_weights(i);
    double acc = 0.0;
    for (std::size_t t = 0; t < nbrs.size(); ++t) acc += ws[t] * in[nbrs[t]];
    out[i] = (1.0 - omega) * in[i] + omega * acc / d;
  }
}

}  // namespace

std::vector<double> jor_sweep(const LaplacianView& L,
                              std::span<const double> chi, double omega) {
  if (omega < 0.0 || omega > 1.0)
    throw ValidationError("jor_sweep: omega must be in [0,1]");
  const Graph& g = L.graph();
  if (chi.size() != static_cast<std::size_t>(g.num_nodes()))
    throw ContractViolation("jor_sweep: vector length mismatch");
  std::vector<double> out(chi.size());
  jor_sweep_into(g, chi, out, omega);
  return out;
}

TestVectorSet relax_test_vectors(const Graph& g, const CouplingParams& p) {
  if (g.is_directed())
    throw ContractViolation("relax_test_vectors: graph must be undirected");
  if (p.vectors < 1 || p.sweeps < 1)
    throw ValidationError("relax_test_vectors: need R >= 1 and k >= 1");
  if (p.omega < 0.0 || p.omega > 1.0)
    throw ValidationError("relax_test_vectors: omega must be in [0,1]");

  const std::size_t n = static_cast<std::size_t>(g.num_nodes());
  Rng rng(p.seed);
  TestVectorSet set;
  set.sweeps = p.sweeps;
  set.chi.resize(static_cast<std::size_t>(p.vectors));
  std::vector<double> scratch(n);
  for (auto& chi : set.chi) {
    chi.resize(n);
    for (double& x : chi) x = rng.uniform01() - 0.5;
    for (int it = 0; it < p.sweeps; ++it) {
      jor_sweep_into(g, chi, scratch, p.omega);
      chi.swap(scratch);
    }
  }
  return set;
}

CouplingMap couplings_from_vectors(
    const Graph& g, const std::vector<std::vector<double>>& chi) {
  CouplingMap map;
  map.rho.assign(static_cast<std::size_t>(g.num_edges()), 0.0);
  const auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    double s = 0.0;
    for (const auto& v : chi) {
      const double diff = std::fabs(v[edges[e].u] - v[edges[e].v]);
      s += std::log2(diff < kDistanceFloor ? kDistanceFloor : diff);
    }
    map.rho[e] = -s;  // positive: strongly coupled edges score high
  }
  return map;
}

CouplingMap compute_couplings(const Graph& g, const CouplingParams& p) {
  return couplings_from_vectors(g, relax_test_vectors(g, p).chi);
}

}  // namespace logarr
