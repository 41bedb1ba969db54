#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "stochmatch/augmenting.hpp"
#include "stochmatch/bounds.hpp"
#include "stochmatch/edge_coloring.hpp"
#include "stochmatch/instances.hpp"
#include "stochmatch/max_matching.hpp"
#include "stochmatch/simulate.hpp"

namespace sm = stochmatch;

namespace {

sm::Matching matching_of(const sm::Graph& g, std::vector<std::pair<sm::Vertex, sm::Vertex>> pairs) {
  std::vector<sm::EdgeId> ids;
  for (auto [a, b] : pairs) ids.push_back(*g.find_edge(a, b));
  return sm::Matching(sm::EdgeSet(g, ids));
}

}  // namespace

TEST(Vizing, Fixtures) {
  auto p3 = sm::path_graph(4);
  auto c = sm::vizing_color(p3);
  EXPECT_TRUE(sm::is_proper_coloring(p3, c));
  EXPECT_LE(c.palette_size, 3u);

  auto one = sm::build_graph(2, {{0, 1}});
  EXPECT_EQ(sm::vizing_color(one).palette_size, 1u);

  auto k4 = sm::complete_graph(4);
  auto ck = sm::vizing_color(k4);
  EXPECT_TRUE(sm::is_proper_coloring(k4, ck));
  EXPECT_LE(ck.palette_size, 4u);

  EXPECT_EQ(sm::vizing_color(sm::Graph()).palette_size, 0u);
}

TEST(Vizing, RandomGraphs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 10 + 7 * seed;
    auto g = sm::erdos_renyi(n, 0.05 + 0.01 * static_cast<double>(seed % 20), seed);
    auto c = sm::vizing_color(g);
    ASSERT_TRUE(sm::is_proper_coloring(g, c)) << "seed " << seed;
    EXPECT_LE(c.palette_size, sm::max_degree(g) + 1);
  }
  for (std::size_t n : {5, 9, 16}) {
    auto k = sm::complete_graph(n);
    auto c = sm::vizing_color(k);
    EXPECT_TRUE(sm::is_proper_coloring(k, c));
    EXPECT_LE(c.palette_size, n);
  }
}

TEST(Vizing, DetectsImproperColoring) {
  auto p = sm::path_graph(3);
  sm::EdgeColoring bad{{0, 0}, 1};
  EXPECT_FALSE(sm::is_proper_coloring(p, bad));
}

TEST(Decompose, Fixtures) {
  auto g = sm::path_graph(6);
  auto classes = sm::decompose_into_matchings(sm::EdgeSet(g, {0, 2, 4}));
  ASSERT_EQ(classes.size(), 1u);
  EXPECT_EQ(classes[0].size(), 3u);

  auto tri = sm::build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  auto t = sm::decompose_into_matchings(sm::EdgeSet::all(tri));
  ASSERT_EQ(t.size(), 3u);
  for (const auto& m : t) EXPECT_EQ(m.size(), 1u);

  EXPECT_EQ(sm::decompose_into_matchings(sm::EdgeSet::all(sm::star_graph(4))).size(), 4u);
}

TEST(Decompose, PartitionsEdgeSet) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = sm::erdos_renyi(50, 0.2, seed);
    std::vector<sm::EdgeId> ids;
    for (sm::EdgeId e = 0; e < g.edge_count(); e += 1 + seed % 3) ids.push_back(e);
    sm::EdgeSet s(g, ids);
    auto classes = sm::decompose_into_matchings(s);
    EXPECT_LE(classes.size(), sm::max_degree(s) + 1);
    sm::EdgeSet all = sm::EdgeSet::none(g);
    std::size_t total = 0;
    for (const auto& m : classes) {
      total += m.size();
      all = sm::edge_union(all, m.edges());
    }
    EXPECT_EQ(all, s);
    EXPECT_EQ(total, s.size());
  }
}

TEST(Sequential, Fixtures) {
  auto g = sm::path_graph(3);
  std::vector<sm::Matching> one{matching_of(g, {{0, 1}})};
  EXPECT_EQ(sm::sequential_matching_process(one, std::vector<bool>(2, true)).size(), 1u);

  std::vector<sm::Matching> two{matching_of(g, {{0, 1}}), matching_of(g, {{1, 2}})};
  auto m = sm::sequential_matching_process(two, std::vector<bool>(2, true));
  EXPECT_EQ(m.edges(), sm::EdgeSet(g, {0}));
  EXPECT_EQ(sm::sequential_matching_process(two, std::vector<bool>(2, false)).size(), 0u);
}

TEST(ThreePaths, Fixtures) {
  // a=0 - u=1 - v=2 - b=3, plus a second matched edge 4-5 and free vertex 6.
  auto g = sm::build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {0, 4}, {5, 6}});
  auto mplus = matching_of(g, {{1, 2}, {4, 5}});
  sm::EdgeSet cand(g, {0, 2});  // (0,1), (2,3)
  std::vector<bool> all(6, true);
  auto paths = sm::find_disjoint_three_paths(mplus, cand, all);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0], (sm::ThreePath{0, 1, 2, 3}));

  // Vertex 0 also adjacent to matched vertex 4: no longer exclusive.
  sm::EdgeSet shared(g, {0, 2, 4, 5});
  EXPECT_TRUE(sm::find_disjoint_three_paths(mplus, shared, all).empty());

  EXPECT_TRUE(sm::find_disjoint_three_paths(mplus, cand, std::vector<bool>(6, false)).empty());

  // A candidate touching two matched vertices is rejected.
  EXPECT_THROW(sm::find_disjoint_three_paths(mplus, sm::EdgeSet(g, {1}), all), std::invalid_argument);
  // A candidate touching none is rejected.
  auto h = sm::build_graph(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(sm::find_disjoint_three_paths(matching_of(h, {{0, 1}}), sm::EdgeSet(h, {1}), std::vector<bool>(2, true)),
               std::invalid_argument);
}

TEST(ThreePaths, LowestIdTieBreak) {
  // u=0, v=1 matched; free 2, 3 at u; free 4, 5 at v.
  auto g = sm::build_graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
  auto mplus = matching_of(g, {{0, 1}});
  auto paths = sm::find_disjoint_three_paths(mplus, sm::EdgeSet(g, {1, 2, 3, 4}), std::vector<bool>(5, true));
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0], (sm::ThreePath{2, 0, 1, 4}));
  auto m2 = sm::augment(mplus, std::span<const sm::ThreePath>(paths));
  EXPECT_EQ(m2.size(), 2u);
}

TEST(Census, Fixtures) {
  auto g = sm::path_graph(4);
  auto m = matching_of(g, {{0, 1}});
  auto empty = sm::Matching::empty(g);
  EXPECT_EQ(sm::census(m, empty), (sm::AugmentingCensus{1, 0, 0}));

  auto big = matching_of(g, {{0, 1}, {2, 3}});
  auto mid = matching_of(g, {{1, 2}});
  EXPECT_EQ(sm::census(big, mid), (sm::AugmentingCensus{0, 1, 0}));
  EXPECT_EQ(sm::census(big, big), (sm::AugmentingCensus{}));

  auto p6 = sm::path_graph(6);
  EXPECT_EQ(sm::census(matching_of(p6, {{0, 1}, {2, 3}, {4, 5}}), matching_of(p6, {{1, 2}, {3, 4}})),
            (sm::AugmentingCensus{0, 0, 1}));
}

TEST(Census, IdentitiesOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = sm::erdos_renyi(40, 0.08, seed);
    auto m = sm::maximum_matching(g).matching;
    // M' = a greedy matching over a seeded permutation of the edges.
    std::vector<sm::EdgeId> order(g.edge_count());
    for (sm::EdgeId e = 0; e < order.size(); ++e) order[e] = e;
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::uint8_t> used(g.vertex_count(), 0);
    std::vector<sm::EdgeId> greedy;
    for (auto e : order) {
      if (!used[g.edge(e).u] && !used[g.edge(e).v]) {
        used[g.edge(e).u] = used[g.edge(e).v] = 1;
        greedy.push_back(e);
      }
    }
    sm::Matching mp(sm::EdgeSet(g, greedy));
    auto c = sm::census(m, mp);
    EXPECT_LE(c.alpha3 + 2 * c.alpha_ge5, mp.size());
    EXPECT_EQ(c.alpha1 + c.alpha3 + c.alpha_ge5, m.size() - mp.size());
    auto paths = sm::augmenting_paths(m, mp);
    auto aug = sm::augment(mp, std::span<const sm::AugmentingPath>(paths));
    EXPECT_EQ(aug.size(), mp.size() + paths.size());
    EXPECT_EQ(aug.size(), m.size());
  }
}

TEST(Augment, Validation) {
  auto g = sm::path_graph(6);
  auto mp = matching_of(g, {{1, 2}});
  std::vector<sm::AugmentingPath> none;
  EXPECT_EQ(sm::augment(mp, std::span<const sm::AugmentingPath>(none)), mp);

  std::vector<sm::AugmentingPath> ok{{{0, 1, 2, 3}}, {{4, 5}}};
  EXPECT_EQ(sm::augment(mp, std::span<const sm::AugmentingPath>(ok)).size(), 3u);

  std::vector<sm::AugmentingPath> overlap{{{0, 1, 2, 3}}, {{3, 4}}};
  EXPECT_THROW(sm::augment(mp, std::span<const sm::AugmentingPath>(overlap)), std::invalid_argument);
  std::vector<sm::AugmentingPath> matched_end{{{1, 0}}};
  EXPECT_THROW(sm::augment(mp, std::span<const sm::AugmentingPath>(matched_end)), std::invalid_argument);
  std::vector<sm::AugmentingPath> not_alt{{{3, 4}}, {{0, 1}}};
  EXPECT_THROW(sm::augment(mp, std::span<const sm::AugmentingPath>(not_alt)), std::invalid_argument);
  std::vector<sm::AugmentingPath> even{{{0, 1, 2}}};
  EXPECT_THROW(sm::augment(mp, std::span<const sm::AugmentingPath>(even)), std::invalid_argument);

  auto k = sm::complete_graph(4);
  auto mk = matching_of(k, {{0, 1}});
  std::vector<sm::AugmentingPath> nonedge{{{2, 3}}};
  EXPECT_EQ(sm::augment(mk, std::span<const sm::AugmentingPath>(nonedge)).size(), 2u);
}

// Success frequency of one matched edge with d(u) pendants at u and d(v) at
// v, against the per-edge bound with slack kappa * p0 (kappa = 5).
TEST(ThreePaths, SuccessProbabilityBound) {
  const double p0 = 0.1;
  const double kappa = 5.0;
  for (double p : {0.05, 0.1}) {
    const int b = static_cast<int>(std::floor(1.0 / p + 1e-9));
    for (int du : {1, 2, b / 2, b}) {
      for (int dv : {1, b / 2, b}) {
        // u = 0, v = 1, pendants at u: 2..du+1, at v: du+2..du+dv+1.
        std::vector<std::pair<sm::Vertex, sm::Vertex>> pairs{{0, 1}};
        for (int i = 0; i < du; ++i) pairs.emplace_back(0, 2 + i);
        for (int i = 0; i < dv; ++i) pairs.emplace_back(1, 2 + du + i);
        auto g = sm::build_graph(static_cast<std::size_t>(2 + du + dv), pairs);
        auto mplus = matching_of(g, {{0, 1}});
        std::vector<sm::EdgeId> cand;
        for (sm::EdgeId e = 1; e < g.edge_count(); ++e) cand.push_back(e);
        sm::EdgeSet c(g, cand);
        const std::size_t trials = 4000;
        std::vector<double> hit(trials);
        for (std::size_t t = 0; t < trials; ++t) {
          auto realized = sm::realize(c, p, sm::RealizationStream(17, t));
          hit[t] = sm::find_disjoint_three_paths(mplus, c, realized).empty() ? 0.0 : 1.0;
        }
        auto est = sm::summarize(hit, 17);
        const double bound = (1.0 - kappa * p0) * sm::mp_prefactor(p) * -std::expm1(-p * dv) *
                             std::max(du - 1, 0);
        EXPECT_GE(est.mean, bound - 3.0 * est.std_error) << "p " << p << " du " << du << " dv " << dv;
      }
    }
  }
}
