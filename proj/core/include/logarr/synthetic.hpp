#pragma once

#include <cstdint>
#include <string_view>

#include "logarr/graph.hpp"

namespace logarr {

/// Deterministic generator family for tests and the scalability suite.
/// All graphs are undirected with unit weights and unit volumes.
Graph make_path(NodeId n);
Graph make_grid(NodeId rows, NodeId cols);  // row-major ids, 4-neighborhood
Graph make_star(NodeId n);                  // node 0 is the hub
/// Best-effort random d-regular via stub pairing; clashing stubs are
/// re-paired a bounded number of rounds, then dropped.
Graph make_regular(NodeId n, int degree, std::uint64_t seed);
/// Preferential attachment: each new node attaches `m` edges to existing
/// nodes with degree-proportional probability.
Graph make_preferential(NodeId n, int m, std::uint64_t seed);

/// Relabels nodes by a random permutation, destroying any locality the
/// generator's natural numbering carries. Weights and volumes follow.
Graph make_shuffled_ids(const Graph& g, std::uint64_t seed);

/// URIs accepted wherever a graph path may appear:
///   synth:path:N            synth:grid:RxC        synth:star:N
///   synth:regular:N:D:SEED  synth:pa:N:M:SEED     synth:shuffled:SEED:<spec>
/// where <spec> is any of the other forms without the "synth:" prefix.
bool is_synthetic_uri(std::string_view s);
Graph make_synthetic(std::string_view uri);

}  // namespace logarr
