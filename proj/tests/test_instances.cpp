#include <gtest/gtest.h>

#include <sstream>

#include "stochmatch/b_matching.hpp"
#include "stochmatch/edge_list_io.hpp"
#include "stochmatch/instances.hpp"

namespace sm = stochmatch;

TEST(Generators, ErdosRenyiExtremes) {
  EXPECT_EQ(sm::erdos_renyi(20, 0.0, 1).edge_count(), 0u);
  EXPECT_EQ(sm::erdos_renyi(20, 1.0, 1).edge_count(), 190u);
  EXPECT_EQ(sm::erdos_renyi(50, 0.3, 7), sm::erdos_renyi(50, 0.3, 7));
  EXPECT_THROW(sm::erdos_renyi(5, 1.5, 1), std::invalid_argument);
}

TEST(Generators, ErdosRenyiDensity) {
  auto g = sm::erdos_renyi(300, 0.1, 2);
  const double pairs = 300.0 * 299.0 / 2.0;
  EXPECT_NEAR(static_cast<double>(g.edge_count()) / pairs, 0.1, 4.0 * std::sqrt(0.09 / pairs));
}

TEST(Generators, Fixtures) {
  EXPECT_EQ(sm::complete_graph(4).edge_count(), 6u);
  EXPECT_EQ(sm::complete_graph(1).edge_count(), 0u);
  EXPECT_EQ(sm::complete_graph(0).vertex_count(), 0u);
  EXPECT_EQ(sm::complete_bipartite(2, 3).edge_count(), 6u);
  EXPECT_EQ(sm::path_graph(5).edge_count(), 4u);
  EXPECT_EQ(sm::cycle_graph(5).edge_count(), 5u);
  EXPECT_EQ(sm::star_graph(4).degree(0), 4u);
}

TEST(HardInstance, SmallLayout) {
  sm::HardInstanceSpec spec;
  spec.N = 10;
  spec.p = 0.5;
  auto h = sm::hard_instance(spec);
  EXPECT_EQ(h.layout.k, 4u);
  EXPECT_EQ(h.layout.dense_edges, 80u);
  EXPECT_EQ(h.layout.side(), 14u);
  EXPECT_EQ(h.graph.vertex_count(), 28u);
  EXPECT_EQ(h.graph.edge_count(), h.layout.dense_edges + h.layout.sparse_edges);
  // L2 and R2 vertices see exactly the opposite big block.
  for (sm::Vertex v = h.layout.L2.first; v < h.layout.L2.second; ++v) EXPECT_EQ(h.graph.degree(v), 10u);
  for (sm::Vertex v = h.layout.R2.first; v < h.layout.R2.second; ++v) EXPECT_EQ(h.graph.degree(v), 10u);
}

TEST(HardInstance, Errors) {
  sm::HardInstanceSpec spec;
  spec.N = 9;
  EXPECT_THROW(sm::hard_instance(spec), std::invalid_argument);
  spec.N = 10;
  spec.p = 0.05;  // 1/(pN) = 2
  EXPECT_THROW(sm::hard_instance(spec), std::invalid_argument);
  spec.p = 1.0;
  EXPECT_THROW(sm::hard_instance(spec), std::invalid_argument);
  spec.p = 0.5;
  spec.cstar = 1.0;
  EXPECT_THROW(sm::hard_instance(spec), std::invalid_argument);
}

TEST(HardInstance, SparseBlockDensity) {
  sm::HardInstanceSpec spec;
  spec.N = 400;
  spec.p = 0.5;
  spec.seed = 3;
  auto h = sm::hard_instance(spec);
  const double expected = 400.0 * 400.0 / (0.5 * 400.0);
  EXPECT_NEAR(static_cast<double>(h.layout.sparse_edges), expected, 5.0 * std::sqrt(expected));
}

TEST(HardInstance, BMatchingBound) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    sm::HardInstanceSpec spec;
    spec.N = 60;
    spec.seed = seed;
    auto h = sm::hard_instance(spec);
    for (std::size_t b : {1, 2, 4}) {
      EXPECT_LE(sm::maximum_b_matching(h.graph, b).size, sm::hard_instance_b_matching_bound(h, b));
    }
  }
}

TEST(EdgeListIo, RoundTrip) {
  auto g = sm::erdos_renyi(30, 0.2, 4);
  std::stringstream ss;
  sm::write_edge_list(ss, g);
  EXPECT_EQ(sm::read_edge_list(ss), g);

  std::stringstream sub;
  sm::write_edge_list(sub, sm::EdgeSet(g, {0, 2}));
  auto back = sm::read_edge_list(sub);
  EXPECT_EQ(back.vertex_count(), 30u);
  EXPECT_EQ(back.edge_count(), 2u);
  EXPECT_EQ(back.edge(1), g.edge(2));
}

TEST(EdgeListIo, CommentsAndBlankLines) {
  std::istringstream in("# a comment\n\n3 2\n0 1\n  # another\n1 2\n");
  auto g = sm::read_edge_list(in);
  EXPECT_EQ(g.edge_count(), 2u);
}

TEST(EdgeListIo, ParseErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      sm::read_edge_list(in);
    } catch (const sm::ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("3 2\n0 1\n1 x\n"), 3u);
  EXPECT_EQ(line_of("3 1\n0 5\n"), 2u);
  EXPECT_EQ(line_of("3 1\n1 1\n"), 2u);
  EXPECT_EQ(line_of("3 1\n0 1 2\n"), 2u);
  EXPECT_EQ(line_of("3 1\n0 1\n1 2\n"), 3u);
  EXPECT_GT(line_of("3 2\n0 1\n"), 0u);
  EXPECT_GT(line_of("3 2\n0 1\n1 0\n"), 0u);
  std::istringstream empty("");
  EXPECT_THROW(sm::read_edge_list(empty), sm::ParseError);
  EXPECT_THROW(sm::load_edge_list("/nonexistent/file"), std::runtime_error);
}
