#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "logarr/graph.hpp"
#include "logarr/params.hpp"
#include "logarr/solver.hpp"
#include "logarr/types.hpp"

namespace logarr {

/// Everything one solve run reports. Serialized as stable-ordered flat
/// "key value" lines; every timing key starts with "time-" so golden
/// comparisons can strip them.
struct RunReport {
  std::string graph;
  NodeId nodes = 0;
  EdgeId edges = 0;
  double total_weight = 0.0;
  bool directed = false;
  SolverParams params;
  std::vector<NodeId> level_sizes;
  double cost = 0.0;
  double beta = 0.0;
  double time_total_ms = 0.0;
  double time_descent_ms = 0.0;     // coarsening + coarsest exact solve
  double time_initialize_ms = 0.0;  // summed over levels
  double time_relax_ms = 0.0;
  double time_refine_ms = 0.0;

  static RunReport from(std::string name, const Graph& g,
                        const SolverParams& params, const SolveResult& result);
};

void write_report(std::ostream& out, const RunReport& report);

}  // namespace logarr
