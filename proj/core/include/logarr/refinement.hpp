#pragma once

#include "logarr/arrangement.hpp"
#include "logarr/coarsening.hpp"
#include "logarr/graph.hpp"
#include "logarr/params.hpp"
#include "logarr/placement.hpp"

namespace logarr {

/// Coarse-to-fine transfer: seeds inherit their aggregate's coordinate;
/// every F node is parked on one of its seed neighbors' coordinates by the
/// one-node placement rule (visited in descending future-volume order);
/// F nodes without any seed neighbor are appended after everything else in
/// node-id order. The result is legalized.
Arrangement initialize_fine(const Graph& g, const Partition& p,
                            const InterpolationMatrix& P,
                            const Arrangement& coarse,
                            int tau = kExactPlacementThreshold);

/// Sweeps that reposition only F nodes, each over all of its neighbors'
/// current coordinates, with seed coordinates held fixed; legalizes after
/// every sweep and stops once a sweep's relative improvement drops under
/// early_stop.
Arrangement compatible_relaxation(const Graph& g, const Arrangement& a,
                                  const Partition& p, int sweeps,
                                  double early_stop = 1e-4,
                                  int tau = kExactPlacementThreshold);

/// Gauss-Seidel sweeps over every node in current rank order, repositioning
/// in place; same legalization and early-stop policy.
Arrangement gs_relaxation(const Graph& g, const Arrangement& a, int sweeps,
                          double early_stop = 1e-4,
                          int tau = kExactPlacementThreshold);

/// Node-by-node minimization: per pass, visit nodes in the pass-start rank
/// order and try the k insertion ranks on each side; apply the single best
/// move only when it strictly lowers the cost. Never increases cost.
Arrangement nn_refinement(const Graph& g, const Arrangement& a, int k,
                          int passes);

}  // namespace logarr
