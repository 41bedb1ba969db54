#include <gtest/gtest.h>

#include <cmath>

#include "stochmatch/instances.hpp"
#include "stochmatch/simulate.hpp"

namespace sm = stochmatch;

TEST(Exact, Fixtures) {
  auto tri = sm::build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_NEAR(sm::exact_expected_matching(tri, 0.5), 0.875, 1e-15);
  EXPECT_NEAR(sm::exact_expected_matching(sm::path_graph(3), 0.5), 0.75, 1e-15);
  EXPECT_NEAR(sm::exact_expected_matching(sm::cycle_graph(4), 0.5), 1.375, 1e-15);
  EXPECT_DOUBLE_EQ(sm::exact_expected_matching(tri, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(sm::exact_expected_matching(tri, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(sm::exact_expected_matching(sm::build_graph(4, {}), 0.3), 0.0);
  EXPECT_THROW(sm::exact_expected_matching(sm::complete_graph(8), 0.5), sm::InstanceTooLarge);
  EXPECT_THROW(sm::exact_expected_matching(tri, 1.5), std::invalid_argument);
}

TEST(Exact, SingleEdgeIsP) {
  auto e = sm::build_graph(2, {{0, 1}});
  for (double p : {0.01, 0.2, 0.77}) EXPECT_NEAR(sm::exact_expected_matching(e, p), p, 1e-15);
}

TEST(Stream, DeterministicAndChannelSeparated) {
  sm::RealizationStream a(7, 3, 0);
  sm::RealizationStream b(7, 3, 0);
  sm::RealizationStream c(7, 3, 1);
  int differ = 0;
  for (std::uint64_t i = 0; i < 64; ++i) {
    EXPECT_EQ(a.uniform(i), b.uniform(i));
    EXPECT_GE(a.uniform(i), 0.0);
    EXPECT_LT(a.uniform(i), 1.0);
    differ += a.uniform(i) != c.uniform(i);
  }
  EXPECT_GT(differ, 60);
}

TEST(Stream, RealizationFrequency) {
  auto g = sm::complete_graph(40);
  std::size_t hits = 0;
  for (std::size_t t = 0; t < 20; ++t) {
    auto r = sm::realize(sm::EdgeSet::all(g), 0.3, sm::RealizationStream(1, t));
    for (bool x : r) hits += x;
  }
  const double n = 20.0 * static_cast<double>(g.edge_count());
  const double freq = static_cast<double>(hits) / n;
  EXPECT_NEAR(freq, 0.3, 4.0 * std::sqrt(0.21 / n));
}

TEST(MonteCarlo, AgreesWithExact) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto g = sm::erdos_renyi(8, 0.4, seed + 11);
    if (g.edge_count() > 20) continue;
    for (double p : {0.2, 0.6}) {
      const double exact = sm::exact_expected_matching(g, p);
      auto est = sm::estimate_expected_matching(g, p, 4000, seed);
      EXPECT_NEAR(est.mean, exact, 4.0 * est.std_error + 1e-12) << "seed " << seed << " p " << p;
      EXPECT_EQ(est.trials, 4000u);
      EXPECT_LE(est.ci95.first, est.mean);
      EXPECT_GE(est.ci95.second, est.mean);
    }
  }
}

TEST(MonteCarlo, IndependentOfThreadCount) {
  auto g = sm::erdos_renyi(60, 0.1, 3);
  auto one = sm::estimate_expected_matching(g, 0.4, 300, 42, 1);
  auto four = sm::estimate_expected_matching(g, 0.4, 300, 42, 4);
  EXPECT_EQ(one.mean, four.mean);
  EXPECT_EQ(one.std_error, four.std_error);
  auto other = sm::estimate_expected_matching(g, 0.4, 300, 43, 1);
  EXPECT_NE(one.mean, other.mean);
}

TEST(MonteCarlo, Errors) {
  auto g = sm::path_graph(3);
  EXPECT_THROW(sm::estimate_expected_matching(g, 0.5, 0, 1), std::invalid_argument);
  EXPECT_THROW(sm::estimate_expected_matching(g, -0.1, 10, 1), std::invalid_argument);
}

TEST(Ratio, Fixtures) {
  auto g = sm::erdos_renyi(30, 0.2, 1);
  auto same = sm::estimate_ratio(g, sm::EdgeSet::all(g), 0.5, 200, 9);
  EXPECT_DOUBLE_EQ(same.ratio, 1.0);
  EXPECT_NEAR(same.ratio_stderr, 0.0, 1e-12);

  auto none = sm::estimate_ratio(g, sm::EdgeSet::none(g), 0.5, 200, 9);
  EXPECT_DOUBLE_EQ(none.ratio, 0.0);

  // Triangle vs one of its edges: 0.5 / 0.875.
  auto tri = sm::build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  auto r = sm::estimate_ratio(tri, sm::EdgeSet(tri, {0}), 0.5, 20000, 5);
  EXPECT_NEAR(r.ratio, 0.5 / 0.875, 4.0 * r.ratio_stderr);
  auto ri = sm::estimate_ratio(tri, sm::EdgeSet(tri, {0}), 0.5, 20000, 5, sm::Pairing::kIndependent);
  EXPECT_NEAR(ri.ratio, 0.5 / 0.875, 4.0 * ri.ratio_stderr);
  EXPECT_GT(ri.ratio_stderr, r.ratio_stderr);
}

TEST(Ratio, Errors) {
  auto g = sm::path_graph(3);
  auto h = sm::path_graph(3);
  EXPECT_THROW(sm::estimate_ratio(g, sm::EdgeSet::all(h), 0.5, 10, 1), sm::GraphError);
  auto empty = sm::build_graph(3, {});
  EXPECT_THROW(sm::estimate_ratio(empty, sm::EdgeSet::all(empty), 0.5, 10, 1), std::domain_error);
  EXPECT_THROW(sm::estimate_ratio(g, sm::EdgeSet::all(g), 0.5, 0, 1), std::invalid_argument);
}

TEST(Ratio, PairedNeverExceedsOne) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = sm::erdos_renyi(40, 0.1, seed);
    std::vector<sm::EdgeId> half;
    for (sm::EdgeId e = 0; e < g.edge_count(); e += 2) half.push_back(e);
    auto r = sm::estimate_ratio(g, sm::EdgeSet(g, half), 0.3, 100, seed);
    EXPECT_LE(r.ratio, 1.0);
  }
}
