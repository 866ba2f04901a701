#include "logarr/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "logarr/error.hpp"

namespace logarr {

namespace {

// x_i = v_i/2 + sum of volumes ranked before i.
std::vector<double> coords_from_order(std::span<const NodeId> order,
                                      std::span<const double> volumes) {
  std::vector<double> coord(order.size());
  double prefix = 0.0;
  for (NodeId node : order) {
    const double v = volumes[node];
    coord[node] = prefix + 0.5 * v;
    prefix += v;
  }
  return coord;
}

std::vector<NodeId> ranks_from_order(std::span<const NodeId> order) {
  std::vector<NodeId> rank(order.size());
  for (NodeId r = 0; r < static_cast<NodeId>(order.size()); ++r)
    rank[order[r]] = r;
  return rank;
}

}  // namespace

Arrangement Arrangement::legalize(std::span<const double> raw,
                                  std::span<const double> volumes) {
  if (raw.size() != volumes.size())
    throw ContractViolation("legalize: coordinate/volume size mismatch");
  for (double x : raw)
    if (std::isnan(x)) throw ValidationError("legalize: coordinate is NaN");
  Arrangement a;
  a.order_.resize(raw.size());
  std::iota(a.order_.begin(), a.order_.end(), NodeId{0});
  // Stable sort keeps node-id order on ties.
  std::stable_sort(a.order_.begin(), a.order_.end(),
                   [&](NodeId l, NodeId r) { return raw[l] < raw[r]; });
  a.rank_ = ranks_from_order(a.order_);
  a.coord_ = coords_from_order(a.order_, volumes);
  return a;
}

Arrangement Arrangement::from_order(std::vector<NodeId> order,
                                    std::span<const double> volumes) {
  if (order.size() != volumes.size())
    throw ContractViolation("from_order: order/volume size mismatch");
  const NodeId n = static_cast<NodeId>(order.size());
  std::vector<char> seen(order.size(), 0);
  for (NodeId node : order) {
    if (node < 0 || node >= n)
      throw ValidationError("from_order: node " + std::to_string(node) +
                            " out of range");
    if (seen[node])
      throw ValidationError("from_order: node " + std::to_string(node) +
                            " appears twice");
    seen[node] = 1;
  }
  Arrangement a;
  a.order_ = std::move(order);
  a.rank_ = ranks_from_order(a.order_);
  a.coord_ = coords_from_order(a.order_, volumes);
  return a;
}

void Arrangement::move_node(NodeId node, NodeId target_rank,
                            std::span<const double> volumes) {
  const NodeId r0 = rank_[node];
  const NodeId r1 = target_rank;
  if (r1 < 0 || r1 >= size())
    throw ContractViolation("move_node: target rank out of range");
  if (r0 == r1) return;
  const double vi = volumes[node];
  if (r1 > r0) {
    // Window r0+1..r1 shifts down one rank (-vi in coordinates).
    double gained = 0.0;
    for (NodeId r = r0 + 1; r <= r1; ++r) {
      const NodeId j = order_[r];
      gained += volumes[j];
      coord_[j] -= vi;
      order_[r - 1] = j;
      rank_[j] = r - 1;
    }
    coord_[node] += gained;
  } else {
    double lost = 0.0;
    for (NodeId r = r0 - 1; r >= r1; --r) {
      const NodeId j = order_[r];
      lost += volumes[j];
      coord_[j] += vi;
      order_[r + 1] = j;
      rank_[j] = r + 1;
    }
    coord_[node] -= lost;
  }
  order_[r1] = node;
  rank_[node] = r1;
}

void Arrangement::relegalize(std::span<const double> volumes) {
  coord_ = coords_from_order(order_, volumes);
}

double cost(const Graph& g, const Arrangement& a) {
  if (a.size() != g.num_nodes())
    throw ContractViolation("cost: arrangement size mismatch");
  const auto coords = a.coords();
  double c = 0.0;
  for (const Edge& e : g.edges())
    c += e.weight * std::log2(std::fabs(coords[e.u] - coords[e.v]));
  return c;
}

double beta(const Graph& g, const Arrangement& a) {
  const double total = g.total_weight();
  if (total <= 0.0)
    throw ValidationError("beta: total edge weight is not positive");
  return cost(g, a) / total;
}

double cost_delta_move(const Graph& g, const Arrangement& a, NodeId node,
                       NodeId target_rank) {
  const NodeId r0 = a.rank_of(node);
  const NodeId r1 = target_rank;
  if (r0 == r1) return 0.0;
  const auto volumes = g.volumes();
  const auto coords = a.coords();
  const double vi = volumes[node];

  // Inclusive rank window that shifts by one rank; its coordinate shift and
  // the moved node's new coordinate.
  NodeId wlo, whi;
  double shift;  // applied to window nodes
  if (r1 > r0) {
    wlo = r0 + 1;
    whi = r1;
    shift = -vi;
  } else {
    wlo = r1;
    whi = r0 - 1;
    shift = vi;
  }
  double window_volume = 0.0;
  for (NodeId r = wlo; r <= whi; ++r) window_volume += volumes[a.node_at(r)];
  const double xi_new =
      coords[node] + (r1 > r0 ? window_volume : -window_volume);

  const auto ranks = a.ranks();
  auto in_window = [&](NodeId j) {
    const NodeId r = ranks[j];
    return r >= wlo && r <= whi;
  };

  double delta = 0.0;
  // Edges of the moved node.
  {
    const auto nbrs = g.neighbors(node);
    const auto ws = g.incident_weights(node);
    for (std::size_t t = 0; t < nbrs.size(); ++t) {
      const NodeId j = nbrs[t];
      const double xj = in_window(j) ? coords[j] + shift : coords[j];
      delta += ws[t] * (std::log2(std::fabs(xi_new - xj)) -
                        std::log2(std::fabs(coords[node] - coords[j])));
    }
  }
  // Edges from window nodes to nodes outside the window (edges between two
  // window nodes keep their distance; edges to the moved node were counted
  // above).
  for (NodeId r = wlo; r <= whi; ++r) {
    const NodeId j = a.node_at(r);
    const auto nbrs = g.neighbors(j);
    const auto ws = g.incident_weights(j);
    for (std::size_t t = 0; t < nbrs.size(); ++t) {
      const NodeId k = nbrs[t];
      if (k == node || in_window(k)) continue;
      delta += ws[t] * (std::log2(std::fabs(coords[j] + shift - coords[k])) -
                        std::log2(std::fabs(coords[j] - coords[k])));
    }
  }
  return delta;
}

void write_permutation(std::ostream& out, const Graph& g,
                       const Arrangement& a) {
  const auto ids = g.original_ids();
  for (NodeId node : a.order()) out << ids[node] << '\n';
}

Arrangement read_permutation(std::istream& in, const Graph& g) {
  std::unordered_map<long long, NodeId> to_dense;
  to_dense.reserve(static_cast<std::size_t>(g.num_nodes()) * 2);
  const auto ids = g.original_ids();
  for (NodeId i = 0; i < g.num_nodes(); ++i) to_dense.emplace(ids[i], i);

  std::vector<NodeId> order;
  order.reserve(g.num_nodes());
  std::vector<char> seen(ids.size(), 0);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    long long id;
    std::istringstream ls(line);
    if (!(ls >> id))
      throw ParseError(lineno, "expected a node id");
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "unexpected trailing field");
    auto it = to_dense.find(id);
    if (it == to_dense.end())
      throw ValidationError("permutation names unknown node id " +
                            std::to_string(id));
    if (seen[it->second])
      throw ValidationError("permutation repeats node id " +
                            std::to_string(id));
    seen[it->second] = 1;
    order.push_back(it->second);
  }
  if (static_cast<NodeId>(order.size()) != g.num_nodes()) {
    for (NodeId i = 0; i < g.num_nodes(); ++i)
      if (!seen[i])
        throw ValidationError("permutation is missing node id " +
                              std::to_string(ids[i]));
  }
  return Arrangement::from_order(std::move(order), g.volumes());
}

}  // namespace logarr
