#include "logarr/baselines.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "logarr/error.hpp"
#include "logarr/rng.hpp"

namespace logarr {

Arrangement baseline(const Graph& g, BaselineKind kind, std::uint64_t seed) {
  std::vector<NodeId> order(g.num_nodes());
  std::iota(order.begin(), order.end(), NodeId{0});
  switch (kind) {
    case BaselineKind::kNatural:
      break;
    case BaselineKind::kReverse:
      std::reverse(order.begin(), order.end());
      break;
    case BaselineKind::kRandom: {
      Rng rng(seed);
      rng.shuffle(order);
      break;
    }
  }
  return Arrangement::from_order(std::move(order), g.volumes());
}

Comparison compare(
    const Graph& g,
    const std::vector<std::pair<std::string, const Arrangement*>>& named) {
  if (named.size() < 2)
    throw ValidationError("compare: need at least two arrangements");
  Comparison cmp;
  const double total = g.total_weight();
  for (const auto& [name, a] : named) {
    if (a->size() != g.num_nodes())
      throw ValidationError("compare: arrangement '" + name +
                            "' does not cover the graph's nodes");
    const double c = cost(g, *a);
    cmp.entries.push_back({name, c, total > 0.0 ? c / total : 0.0});
  }
  double best_rest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < cmp.entries.size(); ++i)
    best_rest = std::min(best_rest, cmp.entries[i].cost);
  if (best_rest != 0.0)
    cmp.ratio = cmp.entries[0].cost / best_rest;
  else
    cmp.ratio = cmp.entries[0].cost == 0.0
                    ? 1.0
                    : std::numeric_limits<double>::infinity();
  return cmp;
}

}  // namespace logarr
