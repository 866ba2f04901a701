#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "logarr/error.hpp"
#include "logarr/types.hpp"

namespace logarr {

struct ParseOptions {
  bool weighted = false;
  bool directed = false;
};

/// Immutable weighted graph with a CSR incidence index.
///
/// Node ids are dense (0..n-1); the mapping back to the ids seen in the
/// input is kept in original_ids(). Undirected graphs store each edge once
/// with u < v; the incidence index lists every edge under both endpoints.
/// Directed graphs may contain parallel edges (merged later by un()).
/// Self-loops are dropped at construction and counted.
class Graph {
 public:
  static Graph directed(NodeId n, std::vector<Edge> edges,
                        std::vector<double> volumes = {},
                        std::vector<std::int64_t> original_ids = {});

  /// Canonicalizes u < v, drops self-loops, and accumulates the weights of
  /// duplicate (u,v)/(v,u) pairs into one edge (first-occurrence order).
  static Graph undirected(NodeId n, std::vector<Edge> edges,
                          std::vector<double> volumes = {},
                          std::vector<std::int64_t> original_ids = {});

  /// Fast path for edges that are already canonical (u < v, no duplicates,
  /// no self-loops); used by the coarsener and the synthetic generators.
  static Graph undirected_unique(NodeId n, std::vector<Edge> edges,
                                 std::vector<double> volumes = {},
                                 std::vector<std::int64_t> original_ids = {});

  NodeId num_nodes() const { return n_; }
  EdgeId num_edges() const { return static_cast<EdgeId>(edges_.size()); }
  bool is_directed() const { return directed_; }

  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const double> volumes() const { return volumes_; }
  double volume(NodeId i) const { return volumes_[i]; }
  double total_volume() const { return total_volume_; }
  double total_weight() const { return total_weight_; }

  /// Sum of incident edge weights (d_ii of the Laplacian for undirected).
  double weighted_degree(NodeId i) const { return weighted_degree_[i]; }
  std::int64_t degree(NodeId i) const {
    return adj_offsets_[i + 1] - adj_offsets_[i];
  }

  // Incidence index: three parallel spans per node. For undirected graphs a
  // node sees each incident edge once; for directed graphs a node sees both
  // its out- and in-edges.
  std::span<const NodeId> neighbors(NodeId i) const {
    return {adj_node_.data() + adj_offsets_[i],
            adj_node_.data() + adj_offsets_[i + 1]};
  }
  std::span<const double> incident_weights(NodeId i) const {
    return {adj_weight_.data() + adj_offsets_[i],
            adj_weight_.data() + adj_offsets_[i + 1]};
  }
  std::span<const std::int32_t> incident_edges(NodeId i) const {
    return {adj_edge_.data() + adj_offsets_[i],
            adj_edge_.data() + adj_offsets_[i + 1]};
  }

  std::int64_t self_loops_dropped() const { return self_loops_dropped_; }

  std::span<const std::int64_t> original_ids() const { return original_ids_; }
  std::int64_t original_id(NodeId i) const { return original_ids_[i]; }

  /// Same graph with different node volumes.
  Graph with_volumes(std::vector<double> volumes) const;

 private:
  Graph() = default;
  void finish(NodeId n, std::vector<Edge> edges, std::vector<double> volumes,
              std::vector<std::int64_t> original_ids, bool directed,
              bool assume_canonical);

  NodeId n_ = 0;
  bool directed_ = false;
  std::vector<Edge> edges_;
  std::vector<double> volumes_;
  std::vector<std::int64_t> original_ids_;
  std::vector<double> weighted_degree_;
  std::int64_t self_loops_dropped_ = 0;
  double total_weight_ = 0.0;
  double total_volume_ = 0.0;

  std::vector<std::int64_t> adj_offsets_;
  std::vector<NodeId> adj_node_;
  std::vector<double> adj_weight_;
  std::vector<std::int32_t> adj_edge_;
};

/// Undirected working graph: node set preserved, weights of all parallel
/// directed edges between i and j accumulated onto one undirected edge.
/// Already-undirected input is returned unchanged.
Graph un(const Graph& g);

/// Parses whitespace-separated "src dst" or "src dst weight" lines.
/// '#'-prefixed lines are comments. Node ids are non-negative integers,
/// remapped densely in first-seen order. Self-loops are dropped (counted on
/// the graph); for undirected input duplicate lines accumulate weight.
Graph parse_edge_list(std::istream& in, const ParseOptions& options);

/// Optional "node volume" side file; ids are in the input's (original) id
/// space. Nodes absent from the file keep volume 1.0.
std::vector<double> parse_volumes(std::istream& in, const Graph& g);

/// Deterministic writer for the same format: one "src dst weight" line per
/// edge, sorted by (src, dst) in original-id space.
void write_edge_list(std::ostream& out, const Graph& g);

/// Read-only Laplacian L = D - W of an undirected graph. The diagonal is
/// the weighted degree; off-diagonal row entries are -w_ij, exposed through
/// the graph's incidence spans.
class LaplacianView {
 public:
  explicit LaplacianView(const Graph& g) : g_(&g) {
    if (g.is_directed())
      throw ContractViolation("laplacian requires an undirected graph");
  }

  NodeId size() const { return g_->num_nodes(); }
  double diagonal(NodeId i) const { return g_->weighted_degree(i); }
  const Graph& graph() const { return *g_; }

 private:
  const Graph* g_;
};

inline LaplacianView laplacian(const Graph& g) { return LaplacianView(g); }

}  // namespace logarr
