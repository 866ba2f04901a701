#include <sstream>

#include "gtest/gtest.h"
#include "logarr/error.hpp"
#include "logarr/graph.hpp"

using namespace logarr;

TEST(Graph, SingleEdgeDegrees) {
  const Graph g = Graph::undirected(2, {{0, 1, 1.0}});
  EXPECT_EQ(g.num_nodes(), 2);
  EXPECT_EQ(g.num_edges(), 1);
  EXPECT_DOUBLE_EQ(g.weighted_degree(0), 1.0);
  EXPECT_DOUBLE_EQ(g.weighted_degree(1), 1.0);
}

TEST(Graph, TriangleDegrees) {
  const Graph g = Graph::undirected(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
  for (NodeId i = 0; i < 3; ++i) EXPECT_DOUBLE_EQ(g.weighted_degree(i), 2.0);
}

TEST(Graph, StarDegrees) {
  const Graph g = Graph::undirected(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
  EXPECT_DOUBLE_EQ(g.weighted_degree(0), 3.0);
  for (NodeId i = 1; i < 4; ++i) EXPECT_DOUBLE_EQ(g.weighted_degree(i), 1.0);
}

TEST(Graph, UnAccumulatesAntiparallelWeights) {
  const Graph g = Graph::directed(2, {{0, 1, 2.0}, {1, 0, 3.0}});
  const Graph u = un(g);
  EXPECT_FALSE(u.is_directed());
  ASSERT_EQ(u.num_edges(), 1);
  EXPECT_DOUBLE_EQ(u.edges()[0].weight, 5.0);
  EXPECT_DOUBLE_EQ(u.total_weight(), 5.0);
}

TEST(Graph, UnOnUndirectedIsIdentityTransform) {
  const Graph g = Graph::undirected(3, {{0, 1, 1}, {1, 2, 2}});
  const Graph u = un(g);
  EXPECT_EQ(u.num_edges(), g.num_edges());
  EXPECT_DOUBLE_EQ(u.total_weight(), g.total_weight());
}

TEST(Graph, SelfLoopsAreDropped) {
  const Graph g = Graph::undirected(2, {{0, 0, 5.0}, {0, 1, 1.0}});
  EXPECT_EQ(g.num_edges(), 1);
  EXPECT_EQ(g.self_loops_dropped(), 1);
}

TEST(Graph, DefaultVolumesAreUnit) {
  const Graph g = Graph::undirected(3, {{0, 1, 1}});
  EXPECT_DOUBLE_EQ(g.total_volume(), 3.0);
  EXPECT_DOUBLE_EQ(g.volume(2), 1.0);
}

TEST(Graph, ParseSkipsCommentsAndMapsSparseIds) {
  std::istringstream in("# comment line\n\n10 20 2.5\n20 30 1.5\n");
  const Graph g = parse_edge_list(in, ParseOptions{true, false});
  EXPECT_EQ(g.num_nodes(), 3);
  EXPECT_EQ(g.num_edges(), 2);
  EXPECT_DOUBLE_EQ(g.total_weight(), 4.0);
  // First-seen order defines the dense ids.
  EXPECT_EQ(g.original_id(0), 10);
  EXPECT_EQ(g.original_id(1), 20);
  EXPECT_EQ(g.original_id(2), 30);
}

TEST(Graph, ParseRejectsTrailingField) {
  std::istringstream in("0 1 1.0\n");
  EXPECT_THROW(parse_edge_list(in, ParseOptions{false, false}), ParseError);
}

TEST(Graph, ParseRejectsNegativeWeight) {
  std::istringstream in("0 1 -2\n");
  EXPECT_THROW(parse_edge_list(in, ParseOptions{true, false}), ValidationError);
}

TEST(Graph, WriteParseRoundTrip) {
  // Dense ids may be renumbered by first-seen order on re-parse, but the
  // sorted original-id serialization must reach a fixed point immediately.
  const Graph g = Graph::undirected(4, {{0, 1, 1.5}, {1, 3, 2.0}, {2, 3, 1.0}});
  std::stringstream buf;
  write_edge_list(buf, g);
  const Graph h = parse_edge_list(buf, ParseOptions{true, false});
  ASSERT_EQ(h.num_edges(), g.num_edges());
  ASSERT_EQ(h.num_nodes(), g.num_nodes());
  std::ostringstream again;
  write_edge_list(again, h);
  EXPECT_EQ(again.str(), buf.str());
}

TEST(Graph, ParseVolumesByOriginalId) {
  std::istringstream ein("10 20\n20 30\n");
  const Graph g = parse_edge_list(ein, ParseOptions{false, false});
  std::istringstream vin("30 3.0\n10 1.0\n20 2.0\n");
  const std::vector<double> vols = parse_volumes(vin, g);
  EXPECT_DOUBLE_EQ(vols[0], 1.0);
  EXPECT_DOUBLE_EQ(vols[1], 2.0);
  EXPECT_DOUBLE_EQ(vols[2], 3.0);
}

TEST(Graph, ParseVolumesRejectsUnknownId) {
  std::istringstream ein("0 1\n");
  const Graph g = parse_edge_list(ein, ParseOptions{false, false});
  std::istringstream vin("7 1.0\n");
  EXPECT_THROW(parse_volumes(vin, g), ValidationError);
}

TEST(Laplacian, DiagonalIsWeightedDegree) {
  const Graph g = Graph::undirected(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
  const LaplacianView lap = laplacian(g);
  EXPECT_DOUBLE_EQ(lap.diagonal(0), 3.0);
  EXPECT_DOUBLE_EQ(lap.diagonal(1), 1.0);
}

TEST(Laplacian, RejectsDirectedGraph) {
  const Graph g = Graph::directed(2, {{0, 1, 1}});
  EXPECT_THROW(laplacian(g), ContractViolation);
}
