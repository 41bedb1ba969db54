#pragma once

// The sequential greedy process over an ordered list of matchings, exclusive
// length-3 augmenting paths, and the augmenting-path census of M (+) M'.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "stochmatch/graph.hpp"

namespace stochmatch {

/// M^(0) = empty; M^(i) adds the realized edges of M_i not touching
/// M^(i-1). `realized` is indexed by parent edge id.
inline Matching sequential_matching_process(std::span<const Matching> matchings,
                                            const std::vector<bool>& realized) {
  if (matchings.empty()) return Matching();
  const Graph& g = matchings.front().parent();
  std::vector<std::uint8_t> used(g.vertex_count(), 0);
  std::vector<EdgeId> picked;
  for (const auto& mi : matchings) {
    if (!mi.parent().same_as(g)) {
      throw GraphError(GraphError::Kind::kMismatchedParents, "matchings belong to different graphs");
    }
    std::vector<EdgeId> added;
    for (EdgeId e : mi) {
      if (e >= realized.size() || !realized[e]) continue;
      const auto& ed = g.edge(e);
      if (!used[ed.u] && !used[ed.v]) added.push_back(e);
    }
    for (EdgeId e : added) {
      used[g.edge(e).u] = used[g.edge(e).v] = 1;
      picked.push_back(e);
    }
  }
  return Matching(EdgeSet(g, std::move(picked)));
}

/// Alternating path v0 - v1 - ... - v_{2k+1}; edges (v0,v1), (v2,v3), ...
/// are outside the matching being augmented.
struct AugmentingPath {
  std::vector<Vertex> vertices;
  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

struct ThreePath {
  Vertex a, u, v, b;  // (u, v) is matched; (a, u) and (v, b) realized candidates
  AugmentingPath path() const { return {{a, u, v, b}}; }
  friend bool operator==(const ThreePath&, const ThreePath&) = default;
};

using ThreePathSet = std::vector<ThreePath>;

/// For every edge (u, v) of mplus (u < v), the lexicographically smallest pair
/// (a, b), a != b, with (a, u) and (v, b) realized candidates and a, b having
/// no realized candidate neighbor outside {u, v}.
inline ThreePathSet find_disjoint_three_paths(const Matching& mplus, const EdgeSet& candidates,
                                              const std::vector<bool>& realized) {
  const Graph& g = mplus.parent();
  if (!candidates.parent().same_as(g)) {
    throw GraphError(GraphError::Kind::kMismatchedParents, "candidates and matching differ in parent");
  }
  const auto mate = mplus.mates();
  const std::size_t n = g.vertex_count();
  // For each free vertex: realized candidate neighbors (all matched).
  std::vector<std::vector<Vertex>> nbrs(n);
  for (EdgeId e : candidates) {
    const auto& ed = g.edge(e);
    const bool mu = mate[ed.u] != kNoVertex;
    const bool mv = mate[ed.v] != kNoVertex;
    if (mu == mv) {
      throw std::invalid_argument("candidate edge (" + std::to_string(ed.u) + "," + std::to_string(ed.v) +
                                  ") touches " + (mu ? "two" : "no") + " matched vertices");
    }
    if (e >= realized.size() || !realized[e]) continue;
    if (mu) {
      nbrs[ed.v].push_back(ed.u);
    } else {
      nbrs[ed.u].push_back(ed.v);
    }
  }
  auto exclusive_to = [&](Vertex x, Vertex u, Vertex v) {
    return std::all_of(nbrs[x].begin(), nbrs[x].end(), [&](Vertex y) { return y == u || y == v; });
  };
  // Exclusive free neighbors of each matched vertex, ascending.
  std::vector<std::vector<Vertex>> side(n);
  for (Vertex x = 0; x < n; ++x) {
    if (nbrs[x].empty()) continue;
    const Vertex u = nbrs[x].front();
    if (!exclusive_to(x, u, mate[u])) continue;
    for (Vertex y : nbrs[x]) side[y].push_back(x);
  }
  ThreePathSet out;
  for (EdgeId e : mplus) {
    const auto& ed = g.edge(e);
    const auto& as = side[ed.u];
    const auto& bs = side[ed.v];
    bool found = false;
    for (Vertex a : as) {
      for (Vertex b : bs) {
        if (b == a) continue;
        out.push_back({a, ed.u, ed.v, b});
        found = true;
        break;
      }
      if (found) break;
    }
  }
  return out;
}

struct AugmentingCensus {
  std::size_t alpha1 = 0;
  std::size_t alpha3 = 0;
  std::size_t alpha_ge5 = 0;
  friend bool operator==(const AugmentingCensus&, const AugmentingCensus&) = default;
};

/// Augmenting paths w.r.t. mprime among the components of m (+) mprime,
/// each listed from its lower-id endpoint.
inline std::vector<AugmentingPath> augmenting_paths(const Matching& m, const Matching& mprime) {
  const Graph& g = m.parent();
  if (!mprime.parent().same_as(g)) {
    throw GraphError(GraphError::Kind::kMismatchedParents, "matchings belong to different graphs");
  }
  const auto diff = edge_union(edge_difference(m.edges(), mprime.edges()),
                               edge_difference(mprime.edges(), m.edges()));
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> via_m(n, kNoVertex);
  std::vector<Vertex> via_mp(n, kNoVertex);
  for (EdgeId e : diff) {
    const auto& ed = g.edge(e);
    auto& slot = m.contains(e) ? via_m : via_mp;
    slot[ed.u] = ed.v;
    slot[ed.v] = ed.u;
  }
  std::vector<AugmentingPath> out;
  std::vector<std::uint8_t> seen(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    // A path starts at a vertex of degree one in the difference.
    const bool has_m = via_m[s] != kNoVertex;
    const bool has_mp = via_mp[s] != kNoVertex;
    if (seen[s] || has_m == has_mp) continue;
    AugmentingPath path{{s}};
    seen[s] = 1;
    bool on_m = has_m;
    std::size_t m_edges = 0;
    for (Vertex x = s;;) {
      const Vertex y = on_m ? via_m[x] : via_mp[x];
      if (y == kNoVertex) break;
      m_edges += on_m ? 1 : 0;
      path.vertices.push_back(y);
      seen[y] = 1;
      x = y;
      on_m = !on_m;
    }
    if (2 * m_edges == path.length() + 1) out.push_back(std::move(path));
  }
  return out;
}

inline AugmentingCensus census(const Matching& m, const Matching& mprime) {
  AugmentingCensus c;
  for (const auto& path : augmenting_paths(m, mprime)) {
    const std::size_t len = path.length();
    if (len == 1) {
      ++c.alpha1;
    } else if (len == 3) {
      ++c.alpha3;
    } else {
      ++c.alpha_ge5;
    }
  }
  return c;
}

/// Flips every path. Paths must be vertex-disjoint, alternate with respect to
/// mprime, and have both endpoints free in mprime.
inline Matching augment(const Matching& mprime, std::span<const AugmentingPath> paths) {
  const Graph& g = mprime.parent();
  auto mate = mprime.mates();
  std::vector<std::uint8_t> used(g.vertex_count(), 0);
  std::vector<EdgeId> add;
  std::vector<EdgeId> drop;
  for (std::size_t k = 0; k < paths.size(); ++k) {
    const auto& vs = paths[k].vertices;
    const std::string where = "augmenting path " + std::to_string(k) + ": ";
    if (vs.size() < 2 || vs.size() % 2 != 0) throw std::invalid_argument(where + "must have odd length");
    for (Vertex x : vs) {
      if (x >= g.vertex_count()) throw std::invalid_argument(where + "vertex out of range");
      if (used[x]) throw std::invalid_argument(where + "overlaps another path at vertex " + std::to_string(x));
      used[x] = 1;
    }
    if (mate[vs.front()] != kNoVertex || mate[vs.back()] != kNoVertex) {
      throw std::invalid_argument(where + "endpoint is matched");
    }
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
      auto e = g.find_edge(vs[i], vs[i + 1]);
      if (!e) throw std::invalid_argument(where + "uses a non-edge");
      const bool should_match = i % 2 == 1;
      if (mprime.contains(*e) != should_match) throw std::invalid_argument(where + "does not alternate");
      (should_match ? drop : add).push_back(*e);
    }
  }
  std::vector<EdgeId> ids;
  std::sort(drop.begin(), drop.end());
  for (EdgeId e : mprime) {
    if (!std::binary_search(drop.begin(), drop.end(), e)) ids.push_back(e);
  }
  ids.insert(ids.end(), add.begin(), add.end());
  return Matching(EdgeSet(g, std::move(ids)));
}

inline Matching augment(const Matching& mprime, std::span<const ThreePath> paths) {
  std::vector<AugmentingPath> ps;
  ps.reserve(paths.size());
  for (const auto& t : paths) ps.push_back(t.path());
  return augment(mprime, std::span<const AugmentingPath>(ps));
}

}  // namespace stochmatch
