#include "logarr/refinement.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "logarr/error.hpp"
#include "logarr/placement.hpp"

namespace logarr {

namespace {

// Repositions one node onto the best of its neighbors' current raw
// coordinates; leaves neighborless nodes where they are.
void reposition(const Graph& g, std::vector<double>& raw, NodeId i, int tau,
                NeighborSample& sample, PlacementScratch& scratch) {
  const auto nbrs = g.neighbors(i);
  if (nbrs.empty()) return;
  const auto ws = g.incident_weights(i);
  sample.clear();
  for (std::size_t t = 0; t < nbrs.size(); ++t)
    sample.add(raw[nbrs[t]], ws[t]);
  sample.sort_ascending();
  raw[i] = place(sample, tau, scratch);
}

bool below_early_stop(double prev, double cur, double early_stop) {
  return (prev - cur) < early_stop * std::max(1.0, std::fabs(prev));
}

}  // namespace

Arrangement initialize_fine(const Graph& g, const Partition& p,
                            const InterpolationMatrix& P,
                            const Arrangement& coarse, int tau) {
  const NodeId n = g.num_nodes();
  if (p.num_nodes() != n || P.num_rows != n)
    throw ContractViolation("initialize_fine: partition size mismatch");
  if (coarse.size() != p.num_coarse())
    throw ContractViolation("initialize_fine: coarse arrangement mismatch");

  std::vector<double> raw(n, 0.0);
  double max_placed = 0.0;
  for (NodeId j : p.seeds) {
    raw[j] = coarse.coord(p.coarse_index[j]);
    max_placed = std::max(max_placed, raw[j]);
  }

  // Hand-built partitions may lack a traversal order; fall back to node id.
  std::vector<NodeId> natural;
  std::span<const NodeId> visit(p.fv_order);
  if (visit.size() != static_cast<std::size_t>(n)) {
    natural.resize(n);
    for (NodeId i = 0; i < n; ++i) natural[i] = i;
    visit = natural;
  }

  NeighborSample sample;
  PlacementScratch scratch;
  std::vector<NodeId> unplaced;
  for (NodeId i : visit) {
    if (p.is_seed[i]) continue;
    sample.clear();
    const auto nbrs = g.neighbors(i);
    const auto ws = g.incident_weights(i);
    for (std::size_t t = 0; t < nbrs.size(); ++t)
      if (p.is_seed[nbrs[t]]) sample.add(raw[nbrs[t]], ws[t]);
    if (sample.size() == 0) {
      unplaced.push_back(i);
      continue;
    }
    sample.sort_ascending();
    raw[i] = place(sample, tau, scratch);
  }
  // Nodes with no seed neighbor trail the placed ones; the shared raw value
  // makes legalization order them by node id.
  for (NodeId i : unplaced) raw[i] = max_placed + 1.0;
  return Arrangement::legalize(raw, g.volumes());
}

Arrangement compatible_relaxation(const Graph& g, const Arrangement& a,
                                  const Partition& p, int sweeps,
                                  double early_stop, int tau) {
  if (a.size() != g.num_nodes() || p.num_nodes() != g.num_nodes())
    throw ContractViolation("compatible_relaxation: size mismatch");
  Arrangement cur = a;
  Arrangement best = cur;
  double best_cost = cost(g, cur);
  double prev_cost = best_cost;
  NeighborSample sample;
  PlacementScratch scratch;
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    std::vector<double> raw(cur.coords().begin(), cur.coords().end());
    for (NodeId i : p.fv_order)
      if (!p.is_seed[i]) reposition(g, raw, i, tau, sample, scratch);
    cur = Arrangement::legalize(raw, g.volumes());
    const double c = cost(g, cur);
    if (c < best_cost) {
      best_cost = c;
      best = cur;
    }
    if (below_early_stop(prev_cost, c, early_stop)) break;
    prev_cost = c;
  }
  return best;
}

Arrangement gs_relaxation(const Graph& g, const Arrangement& a, int sweeps,
                          double early_stop, int tau) {
  if (a.size() != g.num_nodes())
    throw ContractViolation("gs_relaxation: size mismatch");
  Arrangement cur = a;
  Arrangement best = cur;
  double best_cost = cost(g, cur);
  double prev_cost = best_cost;
  NeighborSample sample;
  PlacementScratch scratch;
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    const std::vector<NodeId> visit(cur.order().begin(), cur.order().end());
    std::vector<double> raw(cur.coords().begin(), cur.coords().end());
    for (NodeId i : visit) {
      const double before = raw[i];
      reposition(g, raw, i, tau, sample, scratch);
      // Park one ulp toward the approach side: nodes funneling onto one
      // target coordinate keep their relative order instead of collapsing
      // into an id-ordered tie that can restore the starting arrangement.
      raw[i] = std::nextafter(raw[i], before);
    }
    cur = Arrangement::legalize(raw, g.volumes());
    const double c = cost(g, cur);
    if (c < best_cost) {
      best_cost = c;
      best = cur;
    }
    if (below_early_stop(prev_cost, c, early_stop)) break;
    prev_cost = c;
  }
  return best;
}

Arrangement nn_refinement(const Graph& g, const Arrangement& a, int k,
                          int passes) {
  if (k < 0) throw ValidationError("nn_refinement: k must be >= 0");
  if (passes < 0) throw ValidationError("nn_refinement: passes must be >= 0");
  if (a.size() != g.num_nodes())
    throw ContractViolation("nn_refinement: size mismatch");
  Arrangement cur = a;
  const NodeId n = cur.size();
  const auto volumes = g.volumes();
  for (int pass = 0; pass < passes; ++pass) {
    const std::vector<NodeId> visit(cur.order().begin(), cur.order().end());
    bool moved = false;
    for (NodeId i : visit) {
      const NodeId r = cur.rank_of(i);
      double best_delta = 0.0;
      NodeId best_rank = r;
      for (NodeId d = 1; d <= k; ++d) {
        for (const NodeId target : {r - d, r + d}) {
          if (target < 0 || target >= n) continue;
          const double delta = cost_delta_move(g, cur, i, target);
          if (delta < best_delta) {
            best_delta = delta;
            best_rank = target;
          }
        }
      }
      if (best_delta < -1e-12) {  // reject float-noise "improvements"
        cur.move_node(i, best_rank, volumes);
        moved = true;
      }
    }
    cur.relegalize(volumes);
    if (!moved) break;
  }
  return cur;
}

}  // namespace logarr
