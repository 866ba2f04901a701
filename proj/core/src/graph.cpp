#include "logarr/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>

namespace logarr {

namespace {

void validate_volumes(NodeId n, const std::vector<double>& volumes) {
  for (double v : volumes) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw ValidationError("node volumes must be positive and finite");
  }
  if (static_cast<NodeId>(volumes.size()) != n)
    throw ValidationError("volume vector size does not match node count");
}

}  // namespace

void Graph::finish(NodeId n, std::vector<Edge> edges,
                   std::vector<double> volumes,
                   std::vector<std::int64_t> original_ids, bool directed,
                   bool assume_canonical) {
  if (n <= 0) throw ValidationError("graph has no nodes");
  n_ = n;
  directed_ = directed;

  if (volumes.empty()) volumes.assign(n, 1.0);
  validate_volumes(n, volumes);
  volumes_ = std::move(volumes);

  if (original_ids.empty()) {
    original_ids.resize(n);
    for (NodeId i = 0; i < n; ++i) original_ids[i] = i;
  }
  if (static_cast<NodeId>(original_ids.size()) != n)
    throw ValidationError("original id vector size does not match node count");
  original_ids_ = std::move(original_ids);

  // Validate endpoints and weights, drop self-loops.
  std::vector<Edge> kept;
  kept.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw ValidationError("edge endpoint out of range");
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight))
      throw ValidationError("edge weights must be non-negative and finite");
    if (e.u == e.v) {
      ++self_loops_dropped_;
      continue;
    }
    Edge c = e;
    if (!directed && c.u > c.v) std::swap(c.u, c.v);
    kept.push_back(c);
  }

  if (!directed && !assume_canonical) {
    // Merge duplicate pairs, accumulating weight; first occurrence keeps
    // the edge's position so construction order stays deterministic.
    std::unordered_map<std::uint64_t, EdgeId> seen;
    seen.reserve(kept.size() * 2);
    std::vector<Edge> merged;
    merged.reserve(kept.size());
    for (const Edge& e : kept) {
      const std::uint64_t key =
          (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.u)) << 32) |
          static_cast<std::uint32_t>(e.v);
      auto [it, inserted] =
          seen.emplace(key, static_cast<EdgeId>(merged.size()));
      if (inserted)
        merged.push_back(e);
      else
        merged[it->second].weight += e.weight;
    }
    kept = std::move(merged);
  }
  edges_ = std::move(kept);

  if (edges_.size() > static_cast<std::size_t>(INT32_MAX))
    throw ValidationError("edge count exceeds supported maximum");

  // CSR incidence index via counting sort.
  adj_offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : edges_) {
    ++adj_offsets_[e.u + 1];
    ++adj_offsets_[e.v + 1];
  }
  for (NodeId i = 0; i < n; ++i) adj_offsets_[i + 1] += adj_offsets_[i];
  const std::size_t entries = static_cast<std::size_t>(adj_offsets_[n]);
  adj_node_.resize(entries);
  adj_weight_.resize(entries);
  adj_edge_.resize(entries);
  std::vector<std::int64_t> cursor(adj_offsets_.begin(),
                                   adj_offsets_.end() - 1);
  for (EdgeId id = 0; id < num_edges(); ++id) {
    const Edge& e = edges_[id];
    const std::int64_t pu = cursor[e.u]++;
    adj_node_[pu] = e.v;
    adj_weight_[pu] = e.weight;
    adj_edge_[pu] = static_cast<std::int32_t>(id);
    const std::int64_t pv = cursor[e.v]++;
    adj_node_[pv] = e.u;
    adj_weight_[pv] = e.weight;
    adj_edge_[pv] = static_cast<std::int32_t>(id);
  }

  weighted_degree_.assign(n, 0.0);
  total_weight_ = 0.0;
  for (const Edge& e : edges_) {
    weighted_degree_[e.u] += e.weight;
    weighted_degree_[e.v] += e.weight;
    total_weight_ += e.weight;
  }
  total_volume_ = 0.0;
  for (double v : volumes_) total_volume_ += v;
}

Graph Graph::directed(NodeId n, std::vector<Edge> edges,
                      std::vector<double> volumes,
                      std::vector<std::int64_t> original_ids) {
  Graph g;
  g.finish(n, std::move(edges), std::move(volumes), std::move(original_ids),
           /*directed=*/true, /*assume_canonical=*/false);
  return g;
}

Graph Graph::undirected(NodeId n, std::vector<Edge> edges,
                        std::vector<double> volumes,
                        std::vector<std::int64_t> original_ids) {
  Graph g;
  g.finish(n, std::move(edges), std::move(volumes), std::move(original_ids),
           /*directed=*/false, /*assume_canonical=*/false);
  return g;
}

Graph Graph::undirected_unique(NodeId n, std::vector<Edge> edges,
                               std::vector<double> volumes,
                               std::vector<std::int64_t> original_ids) {
  Graph g;
  g.finish(n, std::move(edges), std::move(volumes), std::move(original_ids),
           /*directed=*/false, /*assume_canonical=*/true);
  return g;
}

Graph Graph::with_volumes(std::vector<double> volumes) const {
  validate_volumes(n_, volumes);
  Graph g = *this;
  g.volumes_ = std::move(volumes);
  g.total_volume_ = 0.0;
  for (double v : g.volumes_) g.total_volume_ += v;
  return g;
}

Graph un(const Graph& g) {
  if (!g.is_directed()) return g;
  std::vector<double> volumes(g.volumes().begin(), g.volumes().end());
  std::vector<std::int64_t> ids(g.original_ids().begin(),
                                g.original_ids().end());
  return Graph::undirected(g.num_nodes(), g.edges(), std::move(volumes),
                           std::move(ids));
}

Graph parse_edge_list(std::istream& in, const ParseOptions& options) {
  std::vector<Edge> edges;
  std::unordered_map<std::int64_t, NodeId> id_map;
  std::vector<std::int64_t> original_ids;

  auto dense = [&](std::int64_t raw) {
    auto [it, inserted] =
        id_map.emplace(raw, static_cast<NodeId>(original_ids.size()));
    if (inserted) original_ids.push_back(raw);
    return it->second;
  };

  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;

    std::istringstream fields(line);
    std::int64_t src = 0, dst = 0;
    if (!(fields >> src >> dst))
      throw ParseError(line_no, "expected \"src dst" +
                                    std::string(options.weighted
                                                    ? " weight\""
                                                    : "\""));
    if (src < 0 || dst < 0)
      throw ParseError(line_no, "node ids must be non-negative");
    double w = 1.0;
    if (options.weighted && !(fields >> w))
      throw ParseError(line_no, "missing edge weight");
    std::string trailing;
    if (fields >> trailing)
      throw ParseError(line_no, "unexpected trailing field \"" + trailing +
                                    "\"");
    if (options.weighted && (w < 0.0 || !std::isfinite(w)))
      throw ValidationError("line " + std::to_string(line_no) +
                            ": negative or non-finite edge weight");
    edges.push_back(Edge{dense(src), dense(dst), w});
  }

  if (original_ids.empty()) throw ValidationError("empty graph");

  const NodeId n = static_cast<NodeId>(original_ids.size());
  if (options.directed)
    return Graph::directed(n, std::move(edges), {}, std::move(original_ids));
  return Graph::undirected(n, std::move(edges), {}, std::move(original_ids));
}

std::vector<double> parse_volumes(std::istream& in, const Graph& g) {
  std::unordered_map<std::int64_t, NodeId> to_dense;
  to_dense.reserve(static_cast<std::size_t>(g.num_nodes()) * 2);
  for (NodeId i = 0; i < g.num_nodes(); ++i)
    to_dense.emplace(g.original_id(i), i);

  std::vector<double> volumes(g.num_nodes(), 1.0);
  std::vector<bool> assigned(g.num_nodes(), false);

  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;

    std::istringstream fields(line);
    std::int64_t id = 0;
    double vol = 0.0;
    std::string trailing;
    if (!(fields >> id >> vol) || (fields >> trailing))
      throw ParseError(line_no, "expected \"node volume\"");
    auto it = to_dense.find(id);
    if (it == to_dense.end())
      throw ValidationError("line " + std::to_string(line_no) +
                            ": unknown node id " + std::to_string(id));
    if (assigned[it->second])
      throw ValidationError("line " + std::to_string(line_no) +
                            ": duplicate volume for node " +
                            std::to_string(id));
    if (!(vol > 0.0) || !std::isfinite(vol))
      throw ValidationError("line " + std::to_string(line_no) +
                            ": volume must be positive");
    volumes[it->second] = vol;
    assigned[it->second] = true;
  }
  return volumes;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  struct Row {
    std::int64_t src, dst;
    double w;
  };
  std::vector<Row> rows;
  rows.reserve(static_cast<std::size_t>(g.num_edges()));
  for (const Edge& e : g.edges()) {
    Row r{g.original_id(e.u), g.original_id(e.v), e.weight};
    // Dense-space canonicalization (u < v) need not be canonical in the
    // original id space; undirected rows are direction-free, so order them.
    if (!g.is_directed() && r.src > r.dst) std::swap(r.src, r.dst);
    rows.push_back(r);
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.src != b.src) return a.src < b.src;
    if (a.dst != b.dst) return a.dst < b.dst;
    return a.w < b.w;
  });
  char buf[96];
  for (const Row& r : rows) {
    std::snprintf(buf, sizeof(buf), "%lld %lld %.17g\n",
                  static_cast<long long>(r.src), static_cast<long long>(r.dst),
                  r.w);
    out << buf;
  }
}

}  // namespace logarr
