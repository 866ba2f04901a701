#include <cmath>
#include <sstream>

#include "gtest/gtest.h"
#include "logarr/error.hpp"
#include "logarr/experiments.hpp"
#include "logarr/report.hpp"
#include "logarr/solver.hpp"
#include "logarr/synthetic.hpp"

using namespace logarr;

namespace {

std::vector<std::string> report_keys(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> keys;
  std::string line;
  while (std::getline(in, line)) {
    const auto sp = line.find(' ');
    keys.push_back(line.substr(0, sp));
  }
  return keys;
}

}  // namespace

TEST(Report, StableKeyOrderAndConsistentBeta) {
  const Graph g = make_star(4);
  const SolverParams params;
  const SolveResult res = solve(g, params);
  const RunReport rep = RunReport::from("star4", g, params, res);
  EXPECT_NEAR(rep.beta * g.total_weight(), rep.cost,
              1e-12 * (1.0 + rep.cost));

  std::ostringstream a, b;
  write_report(a, rep);
  write_report(b, rep);
  EXPECT_EQ(a.str(), b.str());

  const std::vector<std::string> keys = report_keys(a.str());
  const std::vector<std::string> expected = {
      "graph",        "nodes",       "edges",         "total-weight",
      "directed",     "theta1",      "theta2",        "omega",
      "vectors",      "jor-iters",   "order",         "coarsest",
      "compat-sweeps", "gs-sweeps",  "nn-k",          "nn-passes",
      "early-stop",   "place-tau",   "seed",          "levels",
      "cost",         "beta",        "time-total-ms", "time-descent-ms",
      "time-initialize-ms", "time-relax-ms", "time-refine-ms"};
  EXPECT_EQ(keys, expected);
}

TEST(Report, GoldenModuloTimingFields) {
  // Everything before the time-* block is deterministic for a fixed seed.
  const Graph g = make_grid(6, 7);
  SolverParams params;
  params.seed = 9;
  const SolveResult r1 = solve(g, params);
  const SolveResult r2 = solve(g, params);
  std::ostringstream a, b;
  write_report(a, RunReport::from("g", g, params, r1));
  write_report(b, RunReport::from("g", g, params, r2));
  const std::string sa = a.str().substr(0, a.str().find("time-"));
  const std::string sb = b.str().substr(0, b.str().find("time-"));
  EXPECT_EQ(sa, sb);
  EXPECT_NE(sa.find("cost "), std::string::npos);
}

TEST(Experiments, PlacementErrorsAreNonNegative) {
  const Graph g = make_preferential(400, 4, 6);
  const auto samples = placement_error_experiment(g, 3, 500);
  ASSERT_GT(samples.size(), 100u);
  for (const PlacementErrorSample& s : samples) {
    EXPECT_GE(s.error, 0.0);
    EXPECT_GE(s.relative, 0.0);
    EXPECT_LE(s.relative, s.error + 1e-15);  // denominator >= 1
  }
}

TEST(Experiments, LogLogSlopeRecoversPowerLaw) {
  // y = c * x^1.17 exactly on the log-log grid.
  std::vector<double> x, y;
  for (double v : {1e3, 1e4, 1e5, 1e6}) {
    x.push_back(v);
    y.push_back(3.0 * std::pow(v, 1.17));
  }
  EXPECT_NEAR(loglog_slope(x, y), 1.17, 1e-9);
}

TEST(Experiments, LogLogSlopeRejectsDegenerateInput) {
  const std::vector<double> one{1e3}, yone{1.0};
  const std::vector<double> same{1e3, 1e3}, neg{1e3, -1.0}, y2{1.0, 2.0};
  EXPECT_THROW(loglog_slope(one, yone), ContractViolation);
  EXPECT_THROW(loglog_slope(same, y2), ValidationError);
  EXPECT_THROW(loglog_slope(neg, y2), ValidationError);
}
