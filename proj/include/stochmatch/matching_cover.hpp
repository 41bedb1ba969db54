#pragma once

// Iterated maximum-matching extraction: take a maximum matching, delete it,
// repeat for R rounds or until no edges remain.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "stochmatch/graph.hpp"
#include "stochmatch/max_matching.hpp"

namespace stochmatch {

struct MatchingCover {
  std::vector<Matching> matchings;  // M_1..M_R, ids in the input graph
  EdgeSet union_set;                // E_MC
  std::size_t rounds = 0;           // effective R after early stop
};

/// R = ceil(c * ln(1/(eps p)) / (eps p)), at least 1. Saturates at SIZE_MAX.
inline std::size_t compute_rounds(double epsilon, double p, double multiplier = 2.0) {
  const double ep = epsilon * p;
  if (!(epsilon > 0.0) || !(p > 0.0) || !(ep < 1.0)) {
    throw std::invalid_argument("compute_rounds needs 0 < eps*p < 1");
  }
  if (!(multiplier > 0.0)) throw std::invalid_argument("round multiplier must be positive");
  const double r = std::ceil(multiplier * std::log(1.0 / ep) / ep);
  if (r >= static_cast<double>(std::numeric_limits<std::size_t>::max())) {
    return std::numeric_limits<std::size_t>::max();
  }
  return std::max<std::size_t>(1, static_cast<std::size_t>(r));
}

/// Runs `rounds` extraction rounds on g.
inline MatchingCover matching_cover_rounds(const Graph& g, std::size_t rounds) {
  MatchingCover cover;
  std::vector<Edge> alive(g.edges().begin(), g.edges().end());
  std::vector<EdgeId> alive_id(g.edge_count());
  for (EdgeId e = 0; e < alive_id.size(); ++e) alive_id[e] = e;
  std::vector<EdgeId> all_ids;

  MatchingSolver solver;
  const std::size_t n = g.vertex_count();
  while (cover.rounds < rounds && !alive.empty()) {
    solver.solve(n, alive);
    auto mate = solver.mate();
    std::vector<EdgeId> picked;
    std::size_t keep = 0;
    for (std::size_t i = 0; i < alive.size(); ++i) {
      const auto& e = alive[i];
      if (mate[e.u] == e.v) {
        picked.push_back(alive_id[i]);
      } else {
        alive[keep] = e;
        alive_id[keep] = alive_id[i];
        ++keep;
      }
    }
    alive.resize(keep);
    alive_id.resize(keep);
    all_ids.insert(all_ids.end(), picked.begin(), picked.end());
    cover.matchings.emplace_back(EdgeSet(g, std::move(picked)));
    ++cover.rounds;
  }
  cover.union_set = EdgeSet(g, std::move(all_ids));
  return cover;
}

/// MatchingCover with R = compute_rounds(epsilon, p, multiplier) unless
/// overridden.
inline MatchingCover matching_cover(const Graph& g, double epsilon, double p,
                                    std::optional<std::size_t> rounds_override = std::nullopt,
                                    double multiplier = 2.0) {
  const std::size_t rounds = rounds_override ? *rounds_override : compute_rounds(epsilon, p, multiplier);
  return matching_cover_rounds(g, rounds);
}

/// mu(E \ E_MC) <= |M_R|.
inline bool residual_bound_check(const Graph& g, const MatchingCover& cover) {
  if (!cover.union_set.parent().same_as(g)) {
    throw GraphError(GraphError::Kind::kForeignEdgeSet, "cover was not computed on this graph");
  }
  const std::size_t last = cover.matchings.empty() ? 0 : cover.matchings.back().size();
  return matching_number(remove_edges(g, cover.union_set).graph) <= last;
}

}  // namespace stochmatch
