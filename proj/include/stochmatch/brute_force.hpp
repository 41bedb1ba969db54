#pragma once

// Exhaustive oracles for small instances. These never call the blossom code,
// so they can be used to check it.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "stochmatch/graph.hpp"

namespace stochmatch {

class InstanceTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kBruteForceMaxEdges = 24;

namespace detail {

// Branch on edges in id order: skip the edge, or take it if both endpoints
// still have capacity. Prunes when even taking every remaining edge cannot
// beat the incumbent.
inline void capped_search(std::span<const Edge> edges, std::size_t idx, std::vector<std::size_t>& load,
                          std::size_t cap, std::size_t taken, std::size_t& best) {
  best = std::max(best, taken);
  if (idx == edges.size() || taken + (edges.size() - idx) <= best) return;
  const auto& e = edges[idx];
  if (load[e.u] < cap && load[e.v] < cap) {
    ++load[e.u];
    ++load[e.v];
    capped_search(edges, idx + 1, load, cap, taken + 1, best);
    --load[e.u];
    --load[e.v];
  }
  capped_search(edges, idx + 1, load, cap, taken, best);
}

inline void require_small(std::size_t m) {
  if (m > kBruteForceMaxEdges) {
    throw InstanceTooLarge("brute force needs m <= " + std::to_string(kBruteForceMaxEdges) +
                           ", got m=" + std::to_string(m));
  }
}

}  // namespace detail

/// Maximum size of a simple b-matching by exhaustive search (m <= 24).
inline std::size_t brute_force_maximum_b_matching(const Graph& g, std::size_t b) {
  detail::require_small(g.edge_count());
  std::vector<std::size_t> load(g.vertex_count(), 0);
  std::size_t best = 0;
  detail::capped_search(g.edges(), 0, load, b, 0, best);
  return best;
}

inline std::size_t brute_force_maximum_matching(const Graph& g) {
  return brute_force_maximum_b_matching(g, 1);
}

/// table[mask] = maximum matching size of the edges of `edges` selected by
/// mask, via mu(S) = max(mu(S - e), 1 + mu(S - N[e])) with e the top edge.
inline std::vector<std::uint8_t> matching_number_table(std::span<const Edge> edges) {
  detail::require_small(edges.size());
  const std::size_t m = edges.size();
  std::vector<std::uint32_t> conflict(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (edges[i].touches(edges[j].u) || edges[i].touches(edges[j].v)) conflict[i] |= 1u << j;
    }
  }
  std::vector<std::uint8_t> table(std::size_t{1} << m, 0);
  for (std::uint32_t mask = 1; mask < table.size(); ++mask) {
    const int top = 31 - __builtin_clz(mask);
    const std::uint32_t without = mask & ~(1u << top);
    const std::uint32_t rest = mask & ~conflict[top];
    table[mask] = std::max<std::uint8_t>(table[without], static_cast<std::uint8_t>(1 + table[rest]));
  }
  return table;
}

}  // namespace stochmatch
