#include <gtest/gtest.h>

#include "stochmatch/b_matching.hpp"
#include "stochmatch/brute_force.hpp"
#include "stochmatch/instances.hpp"
#include "stochmatch/simulate.hpp"

namespace sm = stochmatch;

TEST(DegreeCap, DecimalInputs) {
  EXPECT_EQ(sm::degree_cap(0.2), 5u);
  EXPECT_EQ(sm::degree_cap(1.0 / 3.0), 3u);
  EXPECT_EQ(sm::degree_cap(0.3), 3u);
  EXPECT_EQ(sm::degree_cap(0.5), 2u);
  EXPECT_EQ(sm::degree_cap(0.7), 1u);
  EXPECT_EQ(sm::degree_cap(0.05), 20u);
  EXPECT_THROW(sm::degree_cap(0.0), std::invalid_argument);
  EXPECT_THROW(sm::degree_cap(1.0), std::invalid_argument);
}

TEST(MaximumBMatching, Fixtures) {
  auto k4 = sm::complete_graph(4);
  EXPECT_EQ(sm::maximum_b_matching(k4, 1).size, 2u);
  EXPECT_EQ(sm::maximum_b_matching(k4, 2).size, 4u);
  EXPECT_EQ(sm::maximum_b_matching(k4, 3).size, 6u);
  auto tri = sm::build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(sm::maximum_b_matching(tri, 2).size, 3u);
  EXPECT_EQ(sm::maximum_b_matching(sm::star_graph(5), 2).size, 2u);
  EXPECT_EQ(sm::maximum_b_matching(sm::Graph(), 3).size, 0u);
  EXPECT_THROW(sm::maximum_b_matching(k4, 0), std::invalid_argument);
}

TEST(MaximumBMatching, ResultRespectsCap) {
  auto g = sm::erdos_renyi(80, 0.1, 4);
  for (std::size_t b = 1; b <= 5; ++b) {
    auto r = sm::maximum_b_matching(g, b);
    EXPECT_TRUE(sm::is_b_matching(r.bmatching.edges(), b));
    EXPECT_EQ(r.bmatching.size(), r.size);
  }
}

TEST(MaximumBMatching, AgreesWithBruteForce) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 3 + seed % 6;
    auto g = sm::erdos_renyi(n, 0.3 + 0.05 * static_cast<double>(seed % 10), seed + 1000);
    if (g.edge_count() > sm::kBruteForceMaxEdges) continue;
    const std::size_t b = 1 + seed % 3;
    ASSERT_EQ(sm::maximum_b_matching(g, b).size, sm::brute_force_maximum_b_matching(g, b)) << "seed " << seed;
  }
}

TEST(Duality, K4WithB2) {
  auto cert = sm::certify_optimal(sm::complete_graph(4), 2);
  EXPECT_EQ(cert.size, 4u);
  EXPECT_EQ(cert.witness.value, 4u);
}

TEST(Duality, DualValueIsUpperBound) {
  auto g = sm::erdos_renyi(8, 0.5, 9);
  const std::size_t best = sm::maximum_b_matching(g, 2).size;
  std::vector<sm::Vertex> none;
  std::vector<sm::Vertex> one{0};
  std::vector<sm::Vertex> two{1, 2};
  EXPECT_GE(sm::dual_value(g, 2, none, none), best);
  EXPECT_GE(sm::dual_value(g, 2, one, two), best);
  EXPECT_GE(sm::dual_value(g, 2, two, one), best);
  EXPECT_THROW(sm::dual_value(g, 2, one, one), std::invalid_argument);
}

TEST(Duality, CertifiesRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = sm::erdos_renyi(4 + seed % 5, 0.45, seed + 77);
    const std::size_t b = 1 + seed % 3;
    auto cert = sm::certify_optimal(g, b);
    EXPECT_EQ(cert.witness.value, cert.size);
    EXPECT_EQ(sm::dual_value(g, b, cert.witness.U, cert.witness.W), cert.size);
  }
  EXPECT_THROW(sm::certify_optimal(sm::path_graph(13), 2), sm::InstanceTooLarge);
}

TEST(CapBound, HoldsOnSmallGraphs) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = sm::erdos_renyi(7, 0.4, seed);
    if (g.edge_count() > 16) continue;
    for (double p : {0.2, 0.3, 0.5}) {
      const double opt = sm::exact_expected_matching(g, p);
      EXPECT_TRUE(sm::check_b_matching_lemma(g, p, opt)) << "seed " << seed << " p " << p;
    }
  }
}

TEST(CapBound, ConfidenceIntervalSide) {
  auto g = sm::complete_graph(4);
  // Max 2-matching of K4 has 4 edges; (b - 1) * opt <= 4 needs opt <= 4.
  sm::Estimate e;
  e.mean = 4.1;
  e.ci95 = {3.9, 4.3};
  EXPECT_TRUE(sm::check_b_matching_lemma(g, 0.5, e));
  e.ci95 = {4.05, 4.3};
  EXPECT_FALSE(sm::check_b_matching_lemma(g, 0.5, e));
  EXPECT_TRUE(sm::check_b_matching_lemma(g, 0.7, 100.0));
}
