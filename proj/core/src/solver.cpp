#include "logarr/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <optional>

#include "logarr/error.hpp"
#include "logarr/refinement.hpp"

namespace logarr {

Arrangement solve_exhaustive(const Graph& g) {
  if (g.is_directed())
    throw ContractViolation("solve_exhaustive: graph must be undirected");
  const NodeId n = g.num_nodes();
  if (n > kExhaustiveCap)
    throw ContractViolation("solve_exhaustive: graph exceeds " +
                            std::to_string(kExhaustiveCap) + " nodes");
  const auto volumes = g.volumes();
  const auto edges = g.edges();
  std::vector<double> coord(n);
  auto arrangement_cost = [&](const std::vector<NodeId>& order) {
    double prefix = 0.0;
    for (NodeId node : order) {
      coord[node] = prefix + 0.5 * volumes[node];
      prefix += volumes[node];
    }
    double c = 0.0;
    for (const Edge& e : edges)
      c += e.weight * std::log2(std::fabs(coord[e.u] - coord[e.v]));
    return c;
  };

  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), NodeId{0});
  std::vector<NodeId> best = perm;
  double best_cost = arrangement_cost(perm);
  // next_permutation walks lexicographically upward, so keeping strict
  // improvements only lands on the lexicographically smallest optimum.
  while (std::next_permutation(perm.begin(), perm.end())) {
    const double c = arrangement_cost(perm);
    if (c < best_cost) {
      best_cost = c;
      best = perm;
    }
  }
  return Arrangement::from_order(std::move(best), volumes);
}

namespace {

Arrangement solve_coarsest(const Graph& g) {
  if (g.num_nodes() <= kExhaustiveCap) return solve_exhaustive(g);
  // Reachable only when coarsening stalled, i.e. the level has no usable
  // edges; any order is optimal then, so take the natural one.
  std::vector<NodeId> order(g.num_nodes());
  std::iota(order.begin(), order.end(), NodeId{0});
  return Arrangement::from_order(std::move(order), g.volumes());
}

}  // namespace

Arrangement vcycle(const Graph& g, const SolverParams& params,
                   VcycleTrace* trace) {
  if (g.is_directed())
    throw ContractViolation("vcycle: graph must be undirected");
  params.validate();
  if (trace) *trace = VcycleTrace{};
  using clock = std::chrono::steady_clock;
  auto ms_since = [](clock::time_point from) {
    return std::chrono::duration<double, std::milli>(clock::now() - from)
        .count();
  };

  const auto t_descent = clock::now();
  const Hierarchy h = build_hierarchy(g, params.coarsening());
  Arrangement a = solve_coarsest(h.coarsest);
  if (trace) {
    trace->ms_descent = ms_since(t_descent);
    trace->coarsest_nodes = h.coarsest.num_nodes();
    trace->coarsest_cost = cost(h.coarsest, a);
    for (const Level& lvl : h.levels)
      trace->level_sizes.push_back(lvl.graph.num_nodes());
    trace->level_sizes.push_back(h.coarsest.num_nodes());
  }

  const RefineParams& rp = params.refine;
  for (auto lvl = h.levels.rbegin(); lvl != h.levels.rend(); ++lvl) {
    const Graph& fine = lvl->graph;
    LevelTrace t;
    t.nodes = fine.num_nodes();
    t.edges = fine.num_edges();
    t.total_volume = fine.total_volume();
    t.total_weight = fine.total_weight();
    auto stage = clock::now();
    a = initialize_fine(fine, lvl->partition, lvl->P, a, rp.place_tau);
    t.ms_init = ms_since(stage);
    t.cost_init = cost(fine, a);
    stage = clock::now();
    a = compatible_relaxation(fine, a, lvl->partition, rp.compat_sweeps,
                              rp.early_stop, rp.place_tau);
    t.cost_compat = cost(fine, a);
    a = gs_relaxation(fine, a, rp.gs_sweeps, rp.early_stop, rp.place_tau);
    t.ms_relax = ms_since(stage);
    t.cost_gs = cost(fine, a);
    stage = clock::now();
    a = nn_refinement(fine, a, rp.nn_k, rp.nn_passes);
    t.ms_nn = ms_since(stage);
    t.cost_nn = cost(fine, a);
    if (trace) trace->levels.push_back(t);
  }
  if (trace) std::reverse(trace->levels.begin(), trace->levels.end());
  return a;
}

SolveResult solve(const Graph& g, const SolverParams& params) {
  params.validate();
  const auto t0 = std::chrono::steady_clock::now();

  std::optional<Graph> accumulated;
  if (g.is_directed()) accumulated = un(g);
  const Graph& work = accumulated ? *accumulated : g;

  VcycleTrace trace;
  Arrangement a = vcycle(work, params, &trace);

  // Zero-degree nodes cost nothing anywhere; pin them after everything
  // else, in node-id order, for a stable contract.
  bool any_isolated = false;
  for (NodeId i = 0; i < work.num_nodes() && !any_isolated; ++i)
    any_isolated = work.degree(i) == 0;
  if (any_isolated) {
    std::vector<NodeId> order;
    order.reserve(work.num_nodes());
    for (NodeId node : a.order())
      if (work.degree(node) > 0) order.push_back(node);
    for (NodeId i = 0; i < work.num_nodes(); ++i)
      if (work.degree(i) == 0) order.push_back(i);
    a = Arrangement::from_order(std::move(order), work.volumes());
  }

  const double c = cost(g, a);
  const double total = g.total_weight();
  const auto t1 = std::chrono::steady_clock::now();
  return SolveResult{
      std::move(a), c, total > 0.0 ? c / total : 0.0, std::move(trace),
      std::chrono::duration<double, std::milli>(t1 - t0).count()};
}

}  // namespace logarr
