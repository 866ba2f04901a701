#include "logarr/coarsening.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "logarr/error.hpp"
#include "logarr/rng.hpp"

namespace logarr {

std::vector<double> future_volumes(const Graph& g, const CouplingMap& rho) {
  const NodeId n = g.num_nodes();
  if (rho.rho.size() != static_cast<std::size_t>(g.num_edges()))
    throw ContractViolation("future_volumes: coupling/edge count mismatch");
  std::vector<double> total_rho(n, 0.0);
  for (NodeId i = 0; i < n; ++i)
    for (std::int32_t e : g.incident_edges(i)) total_rho[i] += rho.rho[e];
  std::vector<double> fv(g.volumes().begin(), g.volumes().end());
  const auto volumes = g.volumes();
  for (NodeId i = 0; i < n; ++i) {
    const auto nbrs = g.neighbors(i);
    const auto eids = g.incident_edges(i);
    for (std::size_t t = 0; t < nbrs.size(); ++t) {
      const NodeId j = nbrs[t];
      if (total_rho[j] > 0.0)
        fv[i] += volumes[j] * rho.rho[eids[t]] / total_rho[j];
    }
  }
  return fv;
}

std::vector<NodeId> bucketed_descending_order(std::span<const double> values) {
  const NodeId n = static_cast<NodeId>(values.size());
  std::vector<NodeId> order(n);
  if (n == 0) return order;
  // Bucket by binary exponent; the traversal only needs rough ordering.
  std::vector<int> bin(n);
  int bmin = std::numeric_limits<int>::max();
  int bmax = std::numeric_limits<int>::min();
  for (NodeId i = 0; i < n; ++i) {
    bin[i] = values[i] > 0.0 ? std::ilogb(values[i]) : -1075;
    bmin = std::min(bmin, bin[i]);
    bmax = std::max(bmax, bin[i]);
  }
  // Counting sort, largest bucket first, ascending node id within a bucket.
  std::vector<NodeId> start(static_cast<std::size_t>(bmax - bmin) + 2, 0);
  for (NodeId i = 0; i < n; ++i) ++start[bmax - bin[i] + 1];
  for (std::size_t b = 1; b < start.size(); ++b) start[b] += start[b - 1];
  for (NodeId i = 0; i < n; ++i) order[start[bmax - bin[i]]++] = i;
  return order;
}

namespace {

// One traversal of Eq.-style seed selection at the given thresholds;
// returns the seed count.
NodeId seed_pass(const Graph& g, const CouplingMap& rho,
                 std::span<const NodeId> fv_order,
                 std::span<const double> total_rho, double theta1,
                 double theta2, std::vector<char>& is_seed) {
  const NodeId n = g.num_nodes();
  is_seed.assign(n, 0);
  std::vector<double> rho_to_c(n, 0.0);
  std::vector<double> w_to_c(n, 0.0);
  NodeId count = 0;
  for (NodeId i : fv_order) {
    const double tr = total_rho[i];
    const double tw = g.weighted_degree(i);
    const bool stays_fine = tr > 0.0 && tw > 0.0 &&
                            rho_to_c[i] >= theta1 * tr &&
                            w_to_c[i] >= theta2 * tw;
    if (stays_fine) continue;
    is_seed[i] = 1;
    ++count;
    const auto nbrs = g.neighbors(i);
    const auto ws = g.incident_weights(i);
    const auto eids = g.incident_edges(i);
    for (std::size_t t = 0; t < nbrs.size(); ++t) {
      rho_to_c[nbrs[t]] += rho.rho[eids[t]];
      w_to_c[nbrs[t]] += ws[t];
    }
  }
  return count;
}

}  // namespace

Partition select_seeds(const Graph& g, const CouplingMap& rho,
                       std::span<const NodeId> fv_order, double theta1,
                       double theta2, int order) {
  const NodeId n = g.num_nodes();
  if (theta1 <= 0.0 || theta1 >= 1.0 || theta2 <= 0.0 || theta2 >= 1.0)
    throw ValidationError("select_seeds: thetas must lie in (0,1)");
  if (order < 1) throw ValidationError("select_seeds: order must be >= 1");
  if (fv_order.size() != static_cast<std::size_t>(n))
    throw ContractViolation("select_seeds: traversal order size mismatch");

  std::vector<double> total_rho(n, 0.0);
  for (NodeId i = 0; i < n; ++i)
    for (std::int32_t e : g.incident_edges(i)) total_rho[i] += rho.rho[e];

  Partition p;
  NodeId count =
      seed_pass(g, rho, fv_order, total_rho, theta1, theta2, p.is_seed);
  if (count == n && n > 1) {
    count = seed_pass(g, rho, fv_order, total_rho, theta1 / 2, theta2 / 2,
                      p.is_seed);
    if (count == n) {
      // Last resort: keep every second node of the traversal as a seed.
      p.is_seed.assign(n, 0);
      for (NodeId idx = 0; idx < n; idx += 2) p.is_seed[fv_order[idx]] = 1;
    }
  }

  p.fv_order.assign(fv_order.begin(), fv_order.end());
  p.coarse_index.assign(n, -1);
  for (NodeId i = 0; i < n; ++i)
    if (p.is_seed[i]) {
      p.coarse_index[i] = static_cast<NodeId>(p.seeds.size());
      p.seeds.push_back(i);
    }

  // Top-`order` C-neighbors per F node by (coupling desc, weight desc, id
  // asc). Two passes: sizes, then the selections themselves.
  struct Cand {
    double rho, w;
    NodeId j;
    bool operator<(const Cand& o) const {  // true = ranks ahead
      if (rho != o.rho) return rho > o.rho;
      if (w != o.w) return w > o.w;
      return j < o.j;
    }
  };
  std::vector<Cand> best;
  auto select_into = [&](NodeId i) {
    best.clear();
    const auto nbrs = g.neighbors(i);
    const auto ws = g.incident_weights(i);
    const auto eids = g.incident_edges(i);
    for (std::size_t t = 0; t < nbrs.size(); ++t) {
      if (!p.is_seed[nbrs[t]]) continue;
      Cand c{rho.rho[eids[t]], ws[t], nbrs[t]};
      if (best.size() < static_cast<std::size_t>(order)) {
        best.insert(std::upper_bound(best.begin(), best.end(), c), c);
      } else if (c < best.back()) {
        best.pop_back();
        best.insert(std::upper_bound(best.begin(), best.end(), c), c);
      }
    }
  };

  p.nc_offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (NodeId i = 0; i < n; ++i) {
    if (p.is_seed[i]) continue;
    NodeId c_nbrs = 0;
    for (NodeId j : g.neighbors(i)) c_nbrs += p.is_seed[j] ? 1 : 0;
    p.nc_offsets[i + 1] = std::min<NodeId>(c_nbrs, order);
  }
  for (NodeId i = 0; i < n; ++i) p.nc_offsets[i + 1] += p.nc_offsets[i];
  p.nc_nodes.resize(static_cast<std::size_t>(p.nc_offsets[n]));
  p.nc_weights.resize(static_cast<std::size_t>(p.nc_offsets[n]));
  for (NodeId i = 0; i < n; ++i) {
    if (p.is_seed[i] || p.nc_offsets[i + 1] == p.nc_offsets[i]) continue;
    select_into(i);
    std::int32_t at = p.nc_offsets[i];
    for (const Cand& c : best) {
      p.nc_nodes[at] = c.j;
      p.nc_weights[at] = c.w;
      ++at;
    }
  }
  return p;
}

InterpolationMatrix build_interpolation(const Graph& g, Partition& p) {
  const NodeId n = p.num_nodes();
  if (n != g.num_nodes())
    throw ContractViolation("build_interpolation: partition size mismatch");
  // F nodes with no coarse neighbor become their own aggregate.
  bool promoted = false;
  for (NodeId i = 0; i < n; ++i)
    if (!p.is_seed[i] && p.nc_offsets[i + 1] == p.nc_offsets[i]) {
      p.is_seed[i] = 1;
      promoted = true;
    }
  if (promoted || p.seeds.empty()) {
    p.seeds.clear();
    for (NodeId i = 0; i < n; ++i)
      if (p.is_seed[i]) {
        p.coarse_index[i] = static_cast<NodeId>(p.seeds.size());
        p.seeds.push_back(i);
      } else {
        p.coarse_index[i] = -1;
      }
  }

  InterpolationMatrix P;
  P.num_rows = n;
  P.num_cols = p.num_coarse();
  P.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (NodeId i = 0; i < n; ++i)
    P.offsets[i + 1] =
        P.offsets[i] +
        (p.is_seed[i] ? 1 : p.nc_offsets[i + 1] - p.nc_offsets[i]);
  P.col.resize(static_cast<std::size_t>(P.offsets[n]));
  P.val.resize(static_cast<std::size_t>(P.offsets[n]));

  std::vector<std::pair<NodeId, double>> row;
  for (NodeId i = 0; i < n; ++i) {
    std::int32_t at = P.offsets[i];
    if (p.is_seed[i]) {
      P.col[at] = p.coarse_index[i];
      P.val[at] = 1.0;
      continue;
    }
    const auto nc = p.coarse_neighbors(i);
    const auto ncw = p.coarse_neighbor_weights(i);
    double total = 0.0;
    for (double w : ncw) total += w;
    row.clear();
    for (std::size_t t = 0; t < nc.size(); ++t)
      row.push_back({p.coarse_index[nc[t]],
                     total > 0.0 ? ncw[t] / total
                                 : 1.0 / static_cast<double>(nc.size())});
    std::sort(row.begin(), row.end());
    for (const auto& [c, v] : row) {
      P.col[at] = c;
      P.val[at] = v;
      ++at;
    }
  }
  return P;
}

Graph coarsen_graph(const Graph& g, const InterpolationMatrix& P) {
  if (P.num_rows != g.num_nodes())
    throw ContractViolation("coarsen_graph: interpolation size mismatch");
  const NodeId nc = P.num_cols;

  std::vector<double> coarse_vol(nc, 0.0);
  const auto volumes = g.volumes();
  for (NodeId j = 0; j < g.num_nodes(); ++j) {
    const auto cols = P.row_cols(j);
    const auto vals = P.row_vals(j);
    for (std::size_t t = 0; t < cols.size(); ++t)
      coarse_vol[cols[t]] += volumes[j] * vals[t];
  }

  // Cross terms of every fine edge, keyed by the unordered coarse pair;
  // sort-and-merge keeps accumulation order deterministic.
  std::vector<std::pair<std::uint64_t, double>> terms;
  terms.reserve(static_cast<std::size_t>(g.num_edges()));
  for (const Edge& e : g.edges()) {
    const auto pc = P.row_cols(e.u);
    const auto pv = P.row_vals(e.u);
    const auto qc = P.row_cols(e.v);
    const auto qv = P.row_vals(e.v);
    for (std::size_t a = 0; a < pc.size(); ++a)
      for (std::size_t b = 0; b < qc.size(); ++b) {
        const NodeId cp = pc[a];
        const NodeId cq = qc[b];
        if (cp == cq) continue;  // aggregate-internal mass drops out
        const std::uint64_t key =
            (static_cast<std::uint64_t>(std::min(cp, cq)) << 32) |
            static_cast<std::uint32_t>(std::max(cp, cq));
        terms.push_back({key, pv[a] * e.weight * qv[b]});
      }
  }
  std::sort(terms.begin(), terms.end());

  std::vector<Edge> coarse_edges;
  for (std::size_t t = 0; t < terms.size();) {
    const std::uint64_t key = terms[t].first;
    double w = 0.0;
    for (; t < terms.size() && terms[t].first == key; ++t) w += terms[t].second;
    coarse_edges.push_back(Edge{static_cast<NodeId>(key >> 32),
                                static_cast<NodeId>(key & 0xffffffffu), w});
  }
  return Graph::undirected_unique(nc, coarse_edges, coarse_vol);
}

Hierarchy build_hierarchy(const Graph& g, const CoarseningParams& params) {
  if (g.is_directed())
    throw ContractViolation("build_hierarchy: graph must be undirected");
  if (params.coarsest < 1)
    throw ValidationError("build_hierarchy: coarsest size must be >= 1");

  std::vector<Level> levels;
  Graph cur = g;
  for (int level = 0;
       cur.num_nodes() > params.coarsest && level < params.max_levels;
       ++level) {
    CouplingParams cp = params.coupling;
    cp.seed = mix_seed(params.coupling.seed, static_cast<std::uint64_t>(level));
    const CouplingMap rho = compute_couplings(cur, cp);
    const std::vector<double> fv = future_volumes(cur, rho);
    const std::vector<NodeId> fv_order = bucketed_descending_order(fv);
    Partition part =
        select_seeds(cur, rho, fv_order, params.theta1, params.theta2,
                     params.order);
    InterpolationMatrix P = build_interpolation(cur, part);
    if (P.num_cols >= cur.num_nodes()) break;  // cannot shrink (edgeless)
    Graph coarse = coarsen_graph(cur, P);
    levels.push_back(Level{std::move(cur), std::move(part), std::move(P)});
    cur = std::move(coarse);
  }
  return Hierarchy{std::move(levels), std::move(cur)};
}

}  // namespace logarr
