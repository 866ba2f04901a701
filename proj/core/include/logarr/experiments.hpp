#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "logarr/graph.hpp"

namespace logarr {

/// One sampled one-node placement instance: the energy gap between the
/// linear-time density rule and the exact quadratic rule (always >= 0
/// because the exact rule minimizes over the same candidates), and that
/// gap normalized by |exact energy| + 1.
struct PlacementErrorSample {
  double error = 0.0;
  double relative = 0.0;
};

/// Draws up to max_instances nodes (degree in [2, max_degree]) from g,
/// using a random legal arrangement as the neighbors' coordinates, and
/// measures the density-vs-exact energy gap on each. The density rule is
/// evaluated unconditionally, i.e. the exact-dispatch threshold does not
/// mask small instances.
std::vector<PlacementErrorSample> placement_error_experiment(
    const Graph& g, std::uint64_t seed, std::size_t max_instances,
    NodeId max_degree = 200);

/// Least-squares slope of lg(y) against lg(x); inputs must be positive.
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace logarr
