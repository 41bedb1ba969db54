#pragma once

// The two bounded-degree sparsifiers and the dispatcher between them.
//
// small-p: B = maximum floor(1/p)-matching, then a matching cover of G - B
//          with eps1 = (eps0 - delta0) / 2.
// large-p: M = maximum matching, then a matching cover of G - M with
//          eps = p0^2 / 1e4.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stochmatch/b_matching.hpp"
#include "stochmatch/graph.hpp"
#include "stochmatch/matching_cover.hpp"
#include "stochmatch/max_matching.hpp"

namespace stochmatch {

enum class Branch { kSmallP, kLargeP };

inline const char* branch_name(Branch b) { return b == Branch::kSmallP ? "small-p" : "large-p"; }

struct SparsifierConfig {
  double p = 0.5;
  double p0 = 0.1;
  double delta0 = 0.02;
  double eps0 = 0.02001;
  double multiplier = 2.0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> rounds_override;

  double eps1() const { return (eps0 - delta0) / 2.0; }
  double large_p_eps() const { return p0 * p0 / 1e4; }
  double large_p_delta() const { return p * p / 4.0; }

  void validate() const {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0, 1)");
    if (!(p0 > 0.0 && p0 < 1.0)) throw std::invalid_argument("p0 must lie in (0, 1)");
    if (!(delta0 > 0.0 && delta0 < eps0)) throw std::invalid_argument("need 0 < delta0 < eps0");
    if (!(eps1() > 0.0)) throw std::invalid_argument("eps1 must be positive");
    if (!(multiplier > 0.0)) throw std::invalid_argument("round multiplier must be positive");
  }
};

struct SparsifierStats {
  std::vector<std::size_t> degree_histogram;  // [d] = #vertices of degree d in Q
  std::size_t base_size = 0;
  std::vector<std::size_t> cover_sizes;
  std::size_t rounds = 0;
  std::size_t max_degree = 0;
  std::size_t degree_bound = 0;  // base cap + rounds
  std::size_t n = 0;
  std::size_t m = 0;
};

struct SparsifierOutput {
  Branch branch = Branch::kSmallP;
  EdgeSet h;      // Q = base + cover
  EdgeSet base;   // B or M
  MatchingCover cover;
  SparsifierStats stats;
};

namespace detail {

inline SparsifierOutput assemble_output(const Graph& g, Branch branch, EdgeSet base, std::size_t cap,
                                        double eps, double p, const SparsifierConfig& cfg) {
  auto rest = remove_edges(g, base);
  auto local = matching_cover(rest.graph, eps, p, cfg.rounds_override, cfg.multiplier);

  MatchingCover cover;
  cover.rounds = local.rounds;
  for (const auto& mi : local.matchings) cover.matchings.emplace_back(rest.lift(mi.edges()));
  cover.union_set = rest.lift(local.union_set);

  SparsifierOutput out;
  out.branch = branch;
  out.h = edge_union(base, cover.union_set);
  out.base = std::move(base);
  out.cover = std::move(cover);

  auto& st = out.stats;
  st.n = g.vertex_count();
  st.m = g.edge_count();
  st.base_size = out.base.size();
  for (const auto& mi : out.cover.matchings) st.cover_sizes.push_back(mi.size());
  st.rounds = out.cover.rounds;
  auto deg = degrees(out.h);
  for (auto d : deg) st.max_degree = std::max(st.max_degree, d);
  st.degree_histogram.assign(st.max_degree + 1, 0);
  for (auto d : deg) ++st.degree_histogram[d];
  st.degree_bound = cap + st.rounds;
  if (st.max_degree > st.degree_bound) {
    throw std::logic_error(std::string(branch_name(branch)) + " degree bound violated: " +
                           std::to_string(st.max_degree) + " > " + std::to_string(st.degree_bound));
  }
  return out;
}

}  // namespace detail

inline SparsifierOutput sparsify_small_p(const Graph& g, const SparsifierConfig& cfg) {
  cfg.validate();
  const std::size_t b = degree_cap(cfg.p);
  auto base = maximum_b_matching(g, b).bmatching.edges();
  return detail::assemble_output(g, Branch::kSmallP, std::move(base), b, cfg.eps1(), cfg.p, cfg);
}

inline SparsifierOutput sparsify_large_p(const Graph& g, const SparsifierConfig& cfg) {
  cfg.validate();
  auto base = maximum_matching(g).matching.edges();
  return detail::assemble_output(g, Branch::kLargeP, std::move(base), 1, cfg.large_p_eps(), cfg.p, cfg);
}

/// small-p when p <= p0, large-p otherwise.
inline SparsifierOutput sparsify_auto(const Graph& g, const SparsifierConfig& cfg) {
  return cfg.p <= cfg.p0 ? sparsify_small_p(g, cfg) : sparsify_large_p(g, cfg);
}

}  // namespace stochmatch
