#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "logarr/arrangement.hpp"
#include "logarr/graph.hpp"

namespace logarr {

enum class BaselineKind { kNatural, kRandom, kReverse };

/// Reference orderings: natural = first-seen input order, reverse = its
/// mirror, random = a uniform permutation from the pinned generator.
Arrangement baseline(const Graph& g, BaselineKind kind,
                     std::uint64_t seed = 0);

struct ComparisonEntry {
  std::string name;
  double cost = 0.0;
  double beta = 0.0;
};

/// Cost/beta per arrangement plus first-entry cost over the best (minimum
/// cost) of the remaining entries — the solver goes first by convention.
struct Comparison {
  std::vector<ComparisonEntry> entries;
  double ratio = 0.0;
};

Comparison compare(
    const Graph& g,
    const std::vector<std::pair<std::string, const Arrangement*>>& named);

}  // namespace logarr
