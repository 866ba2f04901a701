#include <cmath>
#include <numeric>
#include <sstream>

#include "gtest/gtest.h"
#include "logarr/arrangement.hpp"
#include "logarr/baselines.hpp"
#include "logarr/error.hpp"
#include "logarr/graph.hpp"
#include "logarr/rng.hpp"
#include "logarr/solver.hpp"
#include "logarr/synthetic.hpp"

using namespace logarr;

namespace {

// Independent brute-force optimum: recursive enumeration (no
// std::next_permutation) with its own coordinate/cost evaluation. The cost
// expression mirrors the library's term order so equal permutations produce
// bit-identical doubles.
double perm_cost(const Graph& g, const std::vector<NodeId>& order) {
  const NodeId n = g.num_nodes();
  std::vector<double> x(n);
  double acc = 0.0;
  for (NodeId r = 0; r < n; ++r) {
    const NodeId i = order[r];
    x[i] = acc + g.volume(i) / 2.0;
    acc += g.volume(i);
  }
  double c = 0.0;
  for (const Edge& e : g.edges())
    c += e.weight * std::log2(std::fabs(x[e.u] - x[e.v]));
  return c;
}

void enumerate(const Graph& g, std::vector<NodeId>& order, NodeId depth,
               double& best) {
  const NodeId n = g.num_nodes();
  if (depth == n) {
    const double c = perm_cost(g, order);
    if (c < best) best = c;
    return;
  }
  for (NodeId t = depth; t < n; ++t) {
    std::swap(order[depth], order[t]);
    enumerate(g, order, depth + 1, best);
    std::swap(order[depth], order[t]);
  }
}

double brute_force_optimum(const Graph& g) {
  std::vector<NodeId> order(g.num_nodes());
  std::iota(order.begin(), order.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  enumerate(g, order, 0, best);
  return best;
}

Graph random_graph(Rng& rng, NodeId n, bool random_volumes) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (rng.uniform01() < 0.5) edges.push_back({u, v, 0.1 + rng.uniform01()});
  if (edges.empty()) edges.push_back({0, n > 1 ? 1 : 0, 1.0});
  std::vector<double> vols;
  if (random_volumes) {
    vols.resize(n);
    for (double& v : vols) v = 0.25 + rng.uniform01() * 2.0;
  }
  return Graph::undirected(n, std::move(edges), std::move(vols));
}

}  // namespace

TEST(Exhaustive, PathP4IsZero) {
  const Graph g = make_path(4);
  const Arrangement a = solve_exhaustive(g);
  EXPECT_DOUBLE_EQ(cost(g, a), 0.0);
}

TEST(Exhaustive, StarOptimumIsOne) {
  const Graph g = make_star(4);
  const Arrangement a = solve_exhaustive(g);
  EXPECT_NEAR(cost(g, a), 1.0, 1e-12);
}

TEST(Exhaustive, TriangleIsOneForAnyTieBreak) {
  const Graph g = Graph::undirected(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
  const Arrangement a = solve_exhaustive(g);
  EXPECT_NEAR(cost(g, a), 1.0, 1e-12);
  // All 3! orders tie; the lexicographically smallest must win.
  for (NodeId r = 0; r < 3; ++r) EXPECT_EQ(a.node_at(r), r);
}

TEST(Exhaustive, RejectsOversizedGraph) {
  const Graph g = make_path(kExhaustiveCap + 1);
  EXPECT_THROW(solve_exhaustive(g), ContractViolation);
}

TEST(Exhaustive, RejectsDirectedGraph) {
  const Graph g = Graph::directed(2, {{0, 1, 1}});
  EXPECT_THROW(solve_exhaustive(g), ContractViolation);
}

TEST(Exhaustive, MatchesBruteForceOracleBitwise) {
  Rng rng(99);
  for (int rep = 0; rep < 25; ++rep) {
    const NodeId n = 2 + static_cast<NodeId>(rng.below(6));
    const Graph g = random_graph(rng, n, rep % 2 == 1);
    const Arrangement a = solve_exhaustive(g);
    EXPECT_EQ(cost(g, a), brute_force_optimum(g)) << "rep=" << rep;
  }
}

TEST(Vcycle, BaseCaseDelegatesToExhaustive) {
  Rng rng(4);
  for (int rep = 0; rep < 10; ++rep) {
    const NodeId n = 2 + static_cast<NodeId>(rng.below(7));
    const Graph g = random_graph(rng, n, false);
    const SolverParams params;
    const Arrangement got = vcycle(g, params);
    const Arrangement want = solve_exhaustive(g);
    for (NodeId r = 0; r < n; ++r) EXPECT_EQ(got.node_at(r), want.node_at(r));
  }
}

TEST(Vcycle, HundredNodePathBeatsRandomBaseline) {
  const Graph g = make_path(100);
  SolverParams params;
  params.seed = 1;
  const Arrangement a = vcycle(g, params);
  const Arrangement rnd = baseline(g, BaselineKind::kRandom, 1);
  EXPECT_LE(cost(g, a), cost(g, rnd));
}

TEST(Vcycle, TraceReportsStrictlyShrinkingLevels) {
  const Graph g = make_preferential(500, 3, 11);
  SolverParams params;
  VcycleTrace trace;
  const Arrangement a = vcycle(g, params, &trace);
  EXPECT_EQ(a.size(), g.num_nodes());
  ASSERT_GE(trace.level_sizes.size(), 2u);
  EXPECT_EQ(trace.level_sizes.front(), g.num_nodes());
  for (std::size_t l = 0; l + 1 < trace.level_sizes.size(); ++l)
    EXPECT_GT(trace.level_sizes[l], trace.level_sizes[l + 1]);
  EXPECT_LE(trace.coarsest_nodes, params.coarsest);
  for (const LevelTrace& t : trace.levels) {
    EXPECT_LE(t.cost_nn, t.cost_init + 1e-9);  // pipeline may only help
  }
}

TEST(Solve, DirectedTwoCycleCostsNothing) {
  const Graph g = Graph::directed(2, {{0, 1, 1}, {1, 0, 1}});
  const SolveResult res = solve(g, SolverParams{});
  EXPECT_DOUBLE_EQ(res.cost, 0.0);
  EXPECT_DOUBLE_EQ(res.beta, 0.0);
}

TEST(Solve, DirectedStarMatchesUndirectedOptimum) {
  const Graph g =
      Graph::directed(4, {{1, 0, 1}, {0, 2, 1}, {3, 0, 1}});
  const SolveResult res = solve(g, SolverParams{});
  EXPECT_NEAR(res.cost, 1.0, 1e-12);
}

TEST(Solve, IsolatedNodesRankLastInIdOrder) {
  // Nodes 2 and 5 have no edges.
  const Graph g = Graph::undirected(6, {{0, 1, 1}, {3, 4, 1}, {1, 3, 1}});
  const SolveResult res = solve(g, SolverParams{});
  EXPECT_EQ(res.arrangement.node_at(4), 2);
  EXPECT_EQ(res.arrangement.node_at(5), 5);
  const double direct = cost(g, res.arrangement);
  EXPECT_NEAR(res.cost, direct, 1e-12 * (1.0 + std::fabs(direct)));
}

TEST(Solve, DeterministicPermutationForFixedSeed) {
  const Graph g = make_preferential(400, 3, 8);
  SolverParams params;
  params.seed = 123;
  const SolveResult a = solve(g, params);
  const SolveResult b = solve(g, params);
  ASSERT_EQ(a.arrangement.size(), b.arrangement.size());
  for (NodeId r = 0; r < a.arrangement.size(); ++r)
    EXPECT_EQ(a.arrangement.node_at(r), b.arrangement.node_at(r));
  EXPECT_EQ(a.cost, b.cost);  // bit-identical
}

TEST(Solve, DirectedCostMatchesUndirectedAccumulation) {
  Rng rng(21);
  std::vector<Edge> edges;
  for (int t = 0; t < 400; ++t) {
    const NodeId u = static_cast<NodeId>(rng.below(80));
    const NodeId v = static_cast<NodeId>(rng.below(80));
    if (u != v) edges.push_back({u, v, 0.5 + rng.uniform01()});
  }
  const Graph g = Graph::directed(80, std::move(edges));
  const SolveResult res = solve(g, SolverParams{});
  const double cu = cost(un(g), res.arrangement);
  EXPECT_LE(std::fabs(res.cost - cu), 1e-9 * (1.0 + std::fabs(res.cost)));
}

TEST(Solve, OutputIsAlwaysABijection) {
  for (const char* uri : {"synth:pa:300:2:5", "synth:grid:12x25",
                          "synth:shuffled:7:path:111"}) {
    const Graph g = make_synthetic(uri);
    const SolveResult res = solve(g, SolverParams{});
    std::vector<char> seen(g.num_nodes(), 0);
    for (NodeId r = 0; r < g.num_nodes(); ++r) {
      const NodeId i = res.arrangement.node_at(r);
      ASSERT_GE(i, 0);
      ASSERT_LT(i, g.num_nodes());
      ASSERT_FALSE(seen[i]) << uri;
      seen[i] = 1;
    }
  }
}

TEST(Solve, SmallGraphsReachBruteForceOptimum) {
  // Base-case optimality: n <= 8 routes through the exact coarsest solve.
  Rng rng(31);
  for (int rep = 0; rep < 15; ++rep) {
    const NodeId n = 2 + static_cast<NodeId>(rng.below(7));
    const Graph g = random_graph(rng, n, rep % 3 == 0);
    const SolveResult res = solve(g, SolverParams{});
    EXPECT_EQ(res.cost, brute_force_optimum(g)) << "rep=" << rep;
  }
}
