#include "logarr/synthetic.hpp"

#include <algorithm>
#include <charconv>
#include <string>
#include <unordered_set>
#include <vector>

#include "logarr/error.hpp"
#include "logarr/rng.hpp"

namespace logarr {

Graph make_path(NodeId n) {
  if (n < 1) throw ValidationError("make_path: n must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  for (NodeId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  return Graph::undirected_unique(n, edges);
}

Graph make_grid(NodeId rows, NodeId cols) {
  if (rows < 1 || cols < 1)
    throw ValidationError("make_grid: dimensions must be >= 1");
  const NodeId n = rows * cols;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * 2);
  for (NodeId r = 0; r < rows; ++r)
    for (NodeId c = 0; c < cols; ++c) {
      const NodeId i = r * cols + c;
      if (c + 1 < cols) edges.push_back({i, i + 1, 1.0});
      if (r + 1 < rows) edges.push_back({i, i + cols, 1.0});
    }
  return Graph::undirected_unique(n, edges);
}

Graph make_star(NodeId n) {
  if (n < 1) throw ValidationError("make_star: n must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  for (NodeId i = 1; i < n; ++i) edges.push_back({0, i, 1.0});
  return Graph::undirected_unique(n, edges);
}

Graph make_regular(NodeId n, int degree, std::uint64_t seed) {
  if (n < 2 || degree < 1 || degree >= n)
    throw ValidationError("make_regular: need n >= 2 and 1 <= d < n");
  Rng rng(seed);
  std::vector<NodeId> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * degree);
  for (NodeId i = 0; i < n; ++i)
    for (int d = 0; d < degree; ++d) stubs.push_back(i);

  std::unordered_set<std::uint64_t> used;
  std::vector<Edge> edges;
  auto key = [](NodeId a, NodeId b) {
    return (static_cast<std::uint64_t>(std::min(a, b)) << 32) |
           static_cast<std::uint32_t>(std::max(a, b));
  };
  for (int round = 0; round < 64 && stubs.size() >= 2; ++round) {
    rng.shuffle(stubs);
    std::vector<NodeId> retry;
    for (std::size_t t = 0; t + 1 < stubs.size(); t += 2) {
      const NodeId a = stubs[t];
      const NodeId b = stubs[t + 1];
      if (a == b || used.count(key(a, b))) {
        retry.push_back(a);
        retry.push_back(b);
        continue;
      }
      used.insert(key(a, b));
      edges.push_back({std::min(a, b), std::max(a, b), 1.0});
    }
    if (stubs.size() % 2) retry.push_back(stubs.back());
    stubs = std::move(retry);
  }
  return Graph::undirected_unique(n, edges);  // leftovers dropped
}

Graph make_preferential(NodeId n, int m, std::uint64_t seed) {
  if (n < 2 || m < 1)
    throw ValidationError("make_preferential: need n >= 2 and m >= 1");
  Rng rng(seed);
  std::vector<NodeId> pool;  // one entry per edge endpoint
  std::vector<Edge> edges;
  std::vector<NodeId> targets;
  for (NodeId i = 1; i < n; ++i) {
    const int want = std::min<NodeId>(m, i);
    targets.clear();
    int guard = 0;
    while (static_cast<int>(targets.size()) < want && guard++ < 64 * want) {
      const NodeId t =
          pool.empty()
              ? static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(i)))
              : pool[rng.below(pool.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end())
        targets.push_back(t);
    }
    for (NodeId t = 0;
         static_cast<int>(targets.size()) < want && t < i; ++t)
      if (std::find(targets.begin(), targets.end(), t) == targets.end())
        targets.push_back(t);
    for (NodeId t : targets) {
      edges.push_back({std::min(t, i), std::max(t, i), 1.0});
      pool.push_back(t);
      pool.push_back(i);
    }
  }
  return Graph::undirected_unique(n, edges);
}

Graph make_shuffled_ids(const Graph& g, std::uint64_t seed) {
  const NodeId n = g.num_nodes();
  std::vector<NodeId> relabel(n);
  for (NodeId i = 0; i < n; ++i) relabel[i] = i;
  Rng rng(seed);
  rng.shuffle(relabel);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Edge& e : edges) {
    e.u = relabel[e.u];
    e.v = relabel[e.v];
  }
  std::vector<double> volumes(n);
  for (NodeId i = 0; i < n; ++i) volumes[relabel[i]] = g.volume(i);
  return g.is_directed() ? Graph::directed(n, edges, volumes)
                         : Graph::undirected(n, edges, volumes);
}

namespace {

constexpr std::string_view kPrefix = "synth:";

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = s.find(sep, start);
    if (at == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      return out;
    }
    out.emplace_back(s.substr(start, at - start));
    start = at + 1;
  }
}

std::int64_t parse_int(const std::string& tok, std::string_view what) {
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("synthetic spec: bad " + std::string(what) + " '" + tok +
                     "'");
  return value;
}

Graph from_spec(std::string_view spec) {
  const auto parts = split(spec, ':');
  const std::string& kind = parts[0];
  auto arity = [&](std::size_t want) {
    if (parts.size() != want)
      throw ParseError("synthetic spec '" + std::string(spec) +
                       "': wrong number of fields");
  };
  if (kind == "path") {
    arity(2);
    return make_path(static_cast<NodeId>(parse_int(parts[1], "size")));
  }
  if (kind == "grid") {
    arity(2);
    const auto dims = split(parts[1], 'x');
    if (dims.size() != 2)
      throw ParseError("synthetic spec: grid wants RxC, got '" + parts[1] +
                       "'");
    return make_grid(static_cast<NodeId>(parse_int(dims[0], "rows")),
                     static_cast<NodeId>(parse_int(dims[1], "cols")));
  }
  if (kind == "star") {
    arity(2);
    return make_star(static_cast<NodeId>(parse_int(parts[1], "size")));
  }
  if (kind == "regular") {
    arity(4);
    return make_regular(static_cast<NodeId>(parse_int(parts[1], "size")),
                        static_cast<int>(parse_int(parts[2], "degree")),
                        static_cast<std::uint64_t>(parse_int(parts[3], "seed")));
  }
  if (kind == "pa") {
    arity(4);
    return make_preferential(
        static_cast<NodeId>(parse_int(parts[1], "size")),
        static_cast<int>(parse_int(parts[2], "attachments")),
        static_cast<std::uint64_t>(parse_int(parts[3], "seed")));
  }
  if (kind == "shuffled") {
    if (parts.size() < 3)
      throw ParseError("synthetic spec: shuffled wants shuffled:SEED:<spec>");
    const std::uint64_t seed =
        static_cast<std::uint64_t>(parse_int(parts[1], "seed"));
    const std::size_t inner_at = spec.find(':', spec.find(':') + 1) + 1;
    return make_shuffled_ids(from_spec(spec.substr(inner_at)), seed);
  }
  throw ParseError("synthetic spec: unknown kind '" + kind + "'");
}

}  // namespace

bool is_synthetic_uri(std::string_view s) { return s.starts_with(kPrefix); }

Graph make_synthetic(std::string_view uri) {
  if (!is_synthetic_uri(uri))
    throw ParseError("not a synthetic graph spec: '" + std::string(uri) + "'");
  return from_spec(uri.substr(kPrefix.size()));
}

}  // namespace logarr
