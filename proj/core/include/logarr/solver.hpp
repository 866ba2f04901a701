#pragma once

#include <vector>

#include "logarr/arrangement.hpp"
#include "logarr/graph.hpp"
#include "logarr/params.hpp"

namespace logarr {

/// Largest size solve_exhaustive will enumerate (n! permutations).
inline constexpr NodeId kExhaustiveCap = 10;

/// Global minimum by enumeration of all n! orders; ties resolve to the
/// lexicographically smallest permutation.
Arrangement solve_exhaustive(const Graph& g);

/// Per-level progress of one V-cycle, finest level first.
struct LevelTrace {
  NodeId nodes = 0;
  EdgeId edges = 0;
  double total_volume = 0.0;
  double total_weight = 0.0;
  double cost_init = 0.0;    // after coarse-to-fine initialization
  double cost_compat = 0.0;  // after compatible relaxation
  double cost_gs = 0.0;      // after Gauss-Seidel relaxation
  double cost_nn = 0.0;      // after node-by-node minimization
  double ms_init = 0.0;
  double ms_relax = 0.0;     // compatible + Gauss-Seidel sweeps
  double ms_nn = 0.0;
};

struct VcycleTrace {
  double ms_descent = 0.0;  // hierarchy construction + coarsest exact solve
  NodeId coarsest_nodes = 0;
  double coarsest_cost = 0.0;
  std::vector<LevelTrace> levels;      // finest first
  std::vector<NodeId> level_sizes;     // node counts, finest ... coarsest
};

/// One V-cycle: coarsen to at most `coarsest` nodes, solve that exactly,
/// then walk back up through initialize/relax/refine. Undirected input.
Arrangement vcycle(const Graph& g, const SolverParams& params,
                   VcycleTrace* trace = nullptr);

struct SolveResult {
  Arrangement arrangement;
  double cost = 0.0;
  double beta = 0.0;  // cost per unit of edge weight; 0 for edgeless input
  VcycleTrace trace;
  double elapsed_ms = 0.0;
};

/// Entry point for any parsed graph: runs the V-cycle on the undirected
/// accumulation when the input is directed, ranks zero-degree nodes last
/// (ascending node id), and reports cost/beta on the input graph itself.
SolveResult solve(const Graph& g, const SolverParams& params);

}  // namespace logarr
