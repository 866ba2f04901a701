#pragma once

#include <cstdint>

#include "logarr/coarsening.hpp"
#include "logarr/types.hpp"

namespace logarr {

/// Knobs of the uncoarsening stages at one level.
struct RefineParams {
  int compat_sweeps = 20;   // cap on compatible-relaxation sweeps
  int gs_sweeps = 20;       // cap on Gauss-Seidel sweeps
  int nn_k = 5;             // candidate half-window of node-by-node moves
  int nn_passes = 1;
  double early_stop = 1e-4; // per-sweep relative improvement cutoff
  int place_tau = 32;       // exact-placement dispatch threshold
};

enum class Preset { kDefault, kFast, kSlow };

struct SolverParams {
  double theta1 = 0.5;
  double theta2 = 0.5;
  double omega = 0.5;
  int vectors = 5;     // R random test vectors
  int jor_iters = 20;  // JOR sweeps per vector
  int order = 1;       // interpolation entries per fine row
  NodeId coarsest = 9; // exhaustive-solve size at the deepest level
  int max_levels = 64;
  RefineParams refine;
  std::uint64_t seed = 0;

  /// default: the full configuration above. fast: single test vector, no
  /// node-by-node pass, 5 relaxation sweeps. slow: half-window 25 and 40
  /// relaxation sweeps.
  static SolverParams preset(Preset p);

  CoarseningParams coarsening() const;

  /// Throws ValidationError on out-of-range values (thetas in [0.2, 0.8],
  /// omega in [0, 1], coarsest in [2, 10], counts non-negative).
  void validate() const;
};

}  // namespace logarr
