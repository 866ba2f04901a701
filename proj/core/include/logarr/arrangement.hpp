#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "logarr/graph.hpp"
#include "logarr/types.hpp"

namespace logarr {

/// A node permutation together with the center-of-mass coordinates it
/// induces under the node volumes: x_i = v_i/2 + sum of volumes ranked
/// before i. Every public constructor legalizes, so coordinates are always
/// strictly increasing along ranks with gaps matching the volumes.
class Arrangement {
 public:
  /// Ranks by stable sort on (raw coordinate, node id), then recomputes
  /// center-of-mass coordinates. NaN coordinates are rejected.
  static Arrangement legalize(std::span<const double> raw,
                              std::span<const double> volumes);

  /// Builds directly from a rank->node order (must be a bijection).
  static Arrangement from_order(std::vector<NodeId> order,
                                std::span<const double> volumes);

  NodeId size() const { return static_cast<NodeId>(order_.size()); }

  std::span<const NodeId> order() const { return order_; }  // rank -> node
  std::span<const NodeId> ranks() const { return rank_; }   // node -> rank
  std::span<const double> coords() const { return coord_; }

  NodeId node_at(NodeId rank) const { return order_[rank]; }
  NodeId rank_of(NodeId node) const { return rank_[node]; }
  double coord(NodeId node) const { return coord_[node]; }

  /// Removes a node and reinserts it at target_rank; everything between
  /// shifts by one rank (and by the node's volume in coordinates).
  void move_node(NodeId node, NodeId target_rank,
                 std::span<const double> volumes);

  /// Recomputes coordinates from the current order by exact prefix sums;
  /// clears any drift accumulated by repeated move_node shifts.
  void relegalize(std::span<const double> volumes);

 private:
  Arrangement() = default;
  std::vector<NodeId> order_;
  std::vector<NodeId> rank_;
  std::vector<double> coord_;
};

/// Arrangement cost: sum over edges of w * lg|x_u - x_v| (lg = log2). For a
/// directed graph this equals the cost on un(g) by weight accumulation.
double cost(const Graph& g, const Arrangement& a);

/// Bits per link: cost / total edge weight.
double beta(const Graph& g, const Arrangement& a);

/// Exact cost change of moving one node to target_rank, summing only the
/// terms of edges incident to the moved node and to the shifted window.
double cost_delta_move(const Graph& g, const Arrangement& a, NodeId node,
                       NodeId target_rank);

/// One original node id per line, finest rank first.
void write_permutation(std::ostream& out, const Graph& g,
                       const Arrangement& a);

/// Reads the same format; validates that the file is a bijection over the
/// graph's nodes, naming any duplicated/missing/unknown id.
Arrangement read_permutation(std::istream& in, const Graph& g);

}  // namespace logarr
