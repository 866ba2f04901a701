#pragma once

#include <cstdint>

namespace logarr {

using NodeId = std::int32_t;
using EdgeId = std::int64_t;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 1.0;
};

// Floor applied to |x_i - x_j| before taking lg, so coincident endpoints
// contribute a large finite penalty instead of -inf.
inline constexpr double kDistanceFloor = 1e-12;

}  // namespace logarr
