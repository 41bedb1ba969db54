#include <gtest/gtest.h>

#include "stochmatch/instances.hpp"
#include "stochmatch/matching_cover.hpp"
#include "stochmatch/simulate.hpp"

namespace sm = stochmatch;

TEST(ComputeRounds, FrozenValues) {
  EXPECT_EQ(sm::compute_rounds(0.5, 0.5), 12u);
  EXPECT_EQ(sm::compute_rounds(0.9, 0.99), 1u);
  EXPECT_EQ(sm::compute_rounds(1e-5, 0.5), 4882430u);
  EXPECT_EQ(sm::compute_rounds(0.005, 0.05), 66353u);
  EXPECT_EQ(sm::compute_rounds(0.5, 0.5, 1.0), 6u);
}

TEST(ComputeRounds, MonotoneInEpsP) {
  std::size_t prev = 0;
  for (double ep = 0.9; ep > 1e-6; ep *= 0.7) {
    const std::size_t r = sm::compute_rounds(ep, 1.0 - 1e-12);
    EXPECT_GE(r, prev);
    EXPECT_GE(r, 1u);
    prev = r;
  }
}

TEST(ComputeRounds, Errors) {
  EXPECT_THROW(sm::compute_rounds(0.0, 0.5), std::invalid_argument);
  EXPECT_THROW(sm::compute_rounds(0.5, 0.0), std::invalid_argument);
  EXPECT_THROW(sm::compute_rounds(2.0, 0.5), std::invalid_argument);
  EXPECT_THROW(sm::compute_rounds(0.5, 0.5, 0.0), std::invalid_argument);
}

TEST(MatchingCover, Triangle) {
  auto g = sm::build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  auto c = sm::matching_cover(g, 0.5, 0.5, 3);
  ASSERT_EQ(c.rounds, 3u);
  for (const auto& m : c.matchings) EXPECT_EQ(m.size(), 1u);
  EXPECT_EQ(c.union_set, sm::EdgeSet::all(g));
}

TEST(MatchingCover, EdgelessAndEarlyStop) {
  auto empty = sm::build_graph(4, {});
  auto c = sm::matching_cover(empty, 0.5, 0.5);
  EXPECT_EQ(c.rounds, 0u);
  EXPECT_TRUE(c.matchings.empty());
  EXPECT_TRUE(c.union_set.empty());

  auto two = sm::build_graph(4, {{0, 1}, {2, 3}});
  auto d = sm::matching_cover(two, 0.5, 0.5, 2);
  ASSERT_EQ(d.rounds, 1u);
  EXPECT_EQ(d.matchings[0].size(), 2u);
}

TEST(MatchingCover, InvariantsOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const std::size_t n = 20 + 7 * seed;
    auto g = sm::erdos_renyi(n, 4.0 / static_cast<double>(n) + 0.01 * static_cast<double>(seed % 5), seed);
    auto c = sm::matching_cover(g, 0.5, 0.5, 1 + seed % 6);
    std::size_t total = 0;
    for (std::size_t i = 0; i < c.matchings.size(); ++i) {
      total += c.matchings[i].size();
      EXPECT_TRUE(c.matchings[i].parent().same_as(g));
      if (i > 0) {
        EXPECT_GE(c.matchings[i - 1].size(), c.matchings[i].size());
      }
    }
    EXPECT_EQ(total, c.union_set.size());  // pairwise disjoint
    EXPECT_TRUE(sm::residual_bound_check(g, c));
    // The first matching is maximum in g.
    if (!c.matchings.empty()) {
      EXPECT_EQ(c.matchings[0].size(), sm::matching_number(g));
    }
  }
}

TEST(ResidualBound, Fixtures) {
  auto tri = sm::build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_TRUE(sm::residual_bound_check(tri, sm::matching_cover(tri, 0.5, 0.5, 1)));
  auto star = sm::star_graph(5);
  EXPECT_TRUE(sm::residual_bound_check(star, sm::matching_cover(star, 0.5, 0.5, 1)));
  auto k6 = sm::complete_graph(6);
  EXPECT_TRUE(sm::residual_bound_check(k6, sm::matching_cover(k6, 0.5, 0.5)));
  EXPECT_THROW(sm::residual_bound_check(star, sm::matching_cover(tri, 0.5, 0.5, 1)), sm::GraphError);
}

// Exact mu of realized E_MC against (1 - eps)|M_R| on small instances.
TEST(MatchingCover, RealizedCoverKeepsLastMatchingExactly) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = sm::erdos_renyi(9, 0.45, seed + 300);
    const double p = 0.5;
    const double eps = 0.5;
    auto c = sm::matching_cover(g, eps, p, 3);
    if (c.union_set.size() > 20 || c.matchings.empty()) continue;
    const double exact = sm::exact_expected_matching(c.union_set, p);
    EXPECT_GE(exact, (1.0 - eps) * static_cast<double>(c.matchings.back().size()) - 1e-12) << "seed " << seed;
  }
}
