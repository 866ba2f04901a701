#include "logarr/report.hpp"

#include <cstdio>
#include <ostream>

namespace logarr {

RunReport RunReport::from(std::string name, const Graph& g,
                          const SolverParams& params,
                          const SolveResult& result) {
  RunReport r;
  r.graph = std::move(name);
  r.nodes = g.num_nodes();
  r.edges = g.num_edges();
  r.total_weight = g.total_weight();
  r.directed = g.is_directed();
  r.params = params;
  r.level_sizes = result.trace.level_sizes;
  r.cost = result.cost;
  r.beta = result.beta;
  r.time_total_ms = result.elapsed_ms;
  r.time_descent_ms = result.trace.ms_descent;
  for (const LevelTrace& t : result.trace.levels) {
    r.time_initialize_ms += t.ms_init;
    r.time_relax_ms += t.ms_relax;
    r.time_refine_ms += t.ms_nn;
  }
  return r;
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_report(std::ostream& out, const RunReport& r) {
  out << "graph " << r.graph << '\n';
  out << "nodes " << r.nodes << '\n';
  out << "edges " << r.edges << '\n';
  out << "total-weight " << fmt(r.total_weight) << '\n';
  out << "directed " << (r.directed ? 1 : 0) << '\n';
  const SolverParams& p = r.params;
  out << "theta1 " << fmt(p.theta1) << '\n';
  out << "theta2 " << fmt(p.theta2) << '\n';
  out << "omega " << fmt(p.omega) << '\n';
  out << "vectors " << p.vectors << '\n';
  out << "jor-iters " << p.jor_iters << '\n';
  out << "order " << p.order << '\n';
  out << "coarsest " << p.coarsest << '\n';
  out << "compat-sweeps " << p.refine.compat_sweeps << '\n';
  out << "gs-sweeps " << p.refine.gs_sweeps << '\n';
  out << "nn-k " << p.refine.nn_k << '\n';
  out << "nn-passes " << p.refine.nn_passes << '\n';
  out << "early-stop " << fmt(p.refine.early_stop) << '\n';
  out << "place-tau " << p.refine.place_tau << '\n';
  out << "seed " << p.seed << '\n';
  out << "levels";
  for (NodeId n : r.level_sizes) out << ' ' << n;
  out << '\n';
  out << "cost " << fmt(r.cost) << '\n';
  out << "beta " << fmt(r.beta) << '\n';
  out << "time-total-ms " << fmt(r.time_total_ms) << '\n';
  out << "time-descent-ms " << fmt(r.time_descent_ms) << '\n';
  out << "time-initialize-ms " << fmt(r.time_initialize_ms) << '\n';
  out << "time-relax-ms " << fmt(r.time_relax_ms) << '\n';
  out << "time-refine-ms " << fmt(r.time_refine_ms) << '\n';
}

}  // namespace logarr
