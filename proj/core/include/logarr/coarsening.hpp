#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "logarr/algebraic_distance.hpp"
#include "logarr/graph.hpp"
#include "logarr/types.hpp"

namespace logarr {

/// FV(i) = v_i + sum over neighbors j of v_j * rho_ij / (total coupling of
/// j): each neighbor donates volume proportional to i's share of its
/// coupling. Drives the traversal order for seed selection.
std::vector<double> future_volumes(const Graph& g, const CouplingMap& rho);

/// Rough descending order: values bucketed by binary exponent (O(lg n)
/// bins), bins walked largest-first, ascending node id inside a bin.
std::vector<NodeId> bucketed_descending_order(std::span<const double> values);

/// Seed set C, complement F, and per-F-node coarse neighborhoods (top-r
/// C-neighbors by coupling). Coarse ordinals are assigned to seeds in
/// ascending node-id order.
struct Partition {
  std::vector<char> is_seed;          // per fine node
  std::vector<NodeId> seeds;          // ascending; position = coarse ordinal
  std::vector<NodeId> coarse_index;   // fine -> ordinal, -1 for F nodes
  std::vector<NodeId> fv_order;       // traversal order used for selection
  // N^c per fine node, CSR layout (empty range for seeds).
  std::vector<std::int32_t> nc_offsets;
  std::vector<NodeId> nc_nodes;
  std::vector<double> nc_weights;     // fine edge weight w_ij alongside

  NodeId num_nodes() const { return static_cast<NodeId>(is_seed.size()); }
  NodeId num_coarse() const { return static_cast<NodeId>(seeds.size()); }
  std::span<const NodeId> coarse_neighbors(NodeId i) const {
    return {nc_nodes.data() + nc_offsets[i],
            static_cast<std::size_t>(nc_offsets[i + 1] - nc_offsets[i])};
  }
  std::span<const double> coarse_neighbor_weights(NodeId i) const {
    return {nc_weights.data() + nc_offsets[i],
            static_cast<std::size_t>(nc_offsets[i + 1] - nc_offsets[i])};
  }
};

/// Walks fv_order with C initially empty; a node stays fine only when both
/// its coupling and its weight to the current C reach the theta share of
/// its totals, otherwise it seeds a new aggregate. Nodes with zero total
/// coupling or weight seed their own aggregate. A stall (C = V) first
/// retries with halved thetas, then falls back to keeping every second
/// node of the traversal as a seed.
Partition select_seeds(const Graph& g, const CouplingMap& rho,
                       std::span<const NodeId> fv_order, double theta1,
                       double theta2, int order = 1);

/// Sparse row-per-fine-node interpolation; every row sums to 1.
struct InterpolationMatrix {
  std::vector<std::int32_t> offsets;  // num_rows + 1
  std::vector<NodeId> col;            // coarse ordinal
  std::vector<double> val;
  NodeId num_rows = 0;
  NodeId num_cols = 0;

  std::span<const NodeId> row_cols(NodeId i) const {
    return {col.data() + offsets[i],
            static_cast<std::size_t>(offsets[i + 1] - offsets[i])};
  }
  std::span<const double> row_vals(NodeId i) const {
    return {val.data() + offsets[i],
            static_cast<std::size_t>(offsets[i + 1] - offsets[i])};
  }
};

/// F rows carry w_ij / (sum of N^c weights) over the coarse neighborhood
/// (uniform when that sum is zero); seed rows carry a single 1. F nodes
/// with an empty neighborhood are first promoted to singleton seeds, which
/// updates the partition in place.
InterpolationMatrix build_interpolation(const Graph& g, Partition& p);

/// Coarse weights w_pq = sum over fine edges of cross terms P_kp*w_kl*P_lq
/// (p != q; aggregate-internal mass is dropped); coarse volumes v_p =
/// sum_j v_j * P_jp. Coarse edges come out sorted by (min,max) endpoint.
Graph coarsen_graph(const Graph& g, const InterpolationMatrix& P);

struct CoarseningParams {
  CouplingParams coupling;
  double theta1 = 0.5;
  double theta2 = 0.5;
  int order = 1;        // max entries per interpolation row
  NodeId coarsest = 9;  // stop once the level fits this many nodes
  int max_levels = 64;
};

struct Level {
  Graph graph;       // fine graph of this level
  Partition partition;
  InterpolationMatrix P;  // to the next-coarser level
};

/// Finest-first levels plus the coarsest graph. Node counts strictly
/// decrease; building stops early if a level refuses to shrink (possible
/// only without edges, when any order is already optimal).
struct Hierarchy {
  std::vector<Level> levels;
  Graph coarsest;
};

Hierarchy build_hierarchy(const Graph& g, const CoarseningParams& params);

}  // namespace logarr
