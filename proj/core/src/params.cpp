#include "logarr/params.hpp"

#include "logarr/error.hpp"

namespace logarr {

SolverParams SolverParams::preset(Preset p) {
  SolverParams sp;
  switch (p) {
    case Preset::kDefault:
      break;
    case Preset::kFast:
      sp.vectors = 1;
      sp.refine.nn_passes = 0;
      sp.refine.compat_sweeps = 5;
      sp.refine.gs_sweeps = 5;
      break;
    case Preset::kSlow:
      sp.refine.nn_k = 25;
      sp.refine.compat_sweeps = 40;
      sp.refine.gs_sweeps = 40;
      break;
  }
  return sp;
}

CoarseningParams SolverParams::coarsening() const {
  CoarseningParams cp;
  cp.coupling.vectors = vectors;
  cp.coupling.sweeps = jor_iters;
  cp.coupling.omega = omega;
  cp.coupling.seed = seed;
  cp.theta1 = theta1;
  cp.theta2 = theta2;
  cp.order = order;
  cp.coarsest = coarsest;
  cp.max_levels = max_levels;
  return cp;
}

void SolverParams::validate() const {
  auto check = [](bool ok, const char* what) {
    if (!ok) throw ValidationError(what);
  };
  check(theta1 >= 0.2 && theta1 <= 0.8, "theta1 must lie in [0.2, 0.8]");
  check(theta2 >= 0.2 && theta2 <= 0.8, "theta2 must lie in [0.2, 0.8]");
  check(omega >= 0.0 && omega <= 1.0, "omega must lie in [0, 1]");
  check(vectors >= 1, "vectors must be >= 1");
  check(jor_iters >= 1, "jor-iters must be >= 1");
  check(order >= 1, "order must be >= 1");
  check(coarsest >= 2 && coarsest <= 10, "coarsest must lie in [2, 10]");
  check(max_levels >= 1, "max-levels must be >= 1");
  check(refine.compat_sweeps >= 0, "compat-sweeps must be >= 0");
  check(refine.gs_sweeps >= 0, "gs-sweeps must be >= 0");
  check(refine.nn_k >= 0, "nn-k must be >= 0");
  check(refine.nn_passes >= 0, "nn-passes must be >= 0");
  check(refine.early_stop >= 0.0, "early-stop must be >= 0");
  check(refine.place_tau >= 0, "place-tau must be >= 0");
}

}  // namespace logarr
