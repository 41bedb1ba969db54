#pragma once

// Maximum simple b-matchings, the min-max duality formula for their size, and
// the check that every graph has a floor(1/p)-matching with at least
// (floor(1/p) - 1) * opt edges.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "stochmatch/brute_force.hpp"
#include "stochmatch/estimate.hpp"
#include "stochmatch/graph.hpp"
#include "stochmatch/max_matching.hpp"

namespace stochmatch {

struct BMatchingResult {
  BMatching bmatching;
  std::size_t size = 0;
};

/// floor(1/p), tolerant to the rounding of decimal inputs such as p = 0.2.
inline std::size_t degree_cap(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0, 1)");
  return static_cast<std::size_t>(std::floor((1.0 / p) * (1.0 + 1e-12)));
}

/// Maximum simple b-matching via the gadget reduction: vertex v becomes
/// min(b, deg v) copies, edge (u,v) becomes gadget vertices x_u - x_v with
/// x_u joined to every copy of u and x_v to every copy of v. An edge is taken
/// iff both its gadget vertices are matched to copies; a maximum matching of
/// the gadget graph has size m + |B*|.
inline BMatchingResult maximum_b_matching(const Graph& g, std::size_t b) {
  if (b < 1) throw std::invalid_argument("b must be at least 1");
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();

  std::vector<std::size_t> first_copy(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) first_copy[v + 1] = first_copy[v] + std::min(b, g.degree(v));
  const std::size_t copies = first_copy[n];
  const std::size_t total = copies + 2 * m;
  if (total >= kNoVertex) throw std::length_error("gadget graph too large");

  auto gadget_u = [&](EdgeId e) { return static_cast<Vertex>(copies + 2 * e); };
  auto gadget_v = [&](EdgeId e) { return static_cast<Vertex>(copies + 2 * e + 1); };

  std::vector<Edge> edges;
  std::size_t gadget_edges = m;
  for (const auto& e : g.edges()) {
    gadget_edges += (first_copy[e.u + 1] - first_copy[e.u]) + (first_copy[e.v + 1] - first_copy[e.v]);
  }
  edges.reserve(gadget_edges);
  for (EdgeId id = 0; id < m; ++id) {
    const auto& e = g.edge(id);
    for (std::size_t c = first_copy[e.u]; c < first_copy[e.u + 1]; ++c) {
      edges.push_back({static_cast<Vertex>(c), gadget_u(id)});
    }
    edges.push_back({gadget_u(id), gadget_v(id)});
    for (std::size_t c = first_copy[e.v]; c < first_copy[e.v + 1]; ++c) {
      edges.push_back({static_cast<Vertex>(c), gadget_v(id)});
    }
  }

  // Seed with a greedy b-matching so the blossom phase only repairs the gap.
  std::vector<Vertex> seed(total, kNoVertex);
  std::vector<std::size_t> load(n, 0);
  for (EdgeId id = 0; id < m; ++id) {
    const auto& e = g.edge(id);
    const Vertex xu = gadget_u(id);
    const Vertex xv = gadget_v(id);
    if (first_copy[e.u] + load[e.u] < first_copy[e.u + 1] &&
        first_copy[e.v] + load[e.v] < first_copy[e.v + 1]) {
      const auto cu = static_cast<Vertex>(first_copy[e.u] + load[e.u]++);
      const auto cv = static_cast<Vertex>(first_copy[e.v] + load[e.v]++);
      seed[cu] = xu;
      seed[xu] = cu;
      seed[cv] = xv;
      seed[xv] = cv;
    } else {
      seed[xu] = xv;
      seed[xv] = xu;
    }
  }

  MatchingSolver solver;
  const std::size_t derived = solver.solve(total, edges, seed);
  auto mate = solver.mate();
  std::vector<EdgeId> chosen;
  for (EdgeId id = 0; id < m; ++id) {
    const Vertex mu = mate[gadget_u(id)];
    const Vertex mv = mate[gadget_v(id)];
    if (mu != kNoVertex && mu < copies && mv != kNoVertex && mv < copies) chosen.push_back(id);
  }
  if (derived != m + chosen.size()) {
    throw std::logic_error("gadget recovery mismatch: derived matching " + std::to_string(derived) +
                           " != m + |B| = " + std::to_string(m + chosen.size()));
  }
  const std::size_t size = chosen.size();
  return {BMatching(EdgeSet(g, std::move(chosen)), b), size};
}

/// A pair of disjoint vertex sets (U, W) and the components of G[V - U - W].
struct DualWitness {
  std::vector<Vertex> U;
  std::vector<Vertex> W;
  std::vector<std::vector<Vertex>> components;
  std::size_t value = 0;
};

namespace detail {

enum class Side : std::uint8_t { kRest, kU, kW };

inline DualWitness evaluate_dual(const Graph& g, std::size_t b, const std::vector<Side>& side) {
  const std::size_t n = g.vertex_count();
  DualWitness w;
  std::size_t inside_w = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (side[v] == Side::kU) w.U.push_back(v);
    if (side[v] == Side::kW) w.W.push_back(v);
  }
  for (const auto& e : g.edges()) {
    if (side[e.u] == Side::kW && side[e.v] == Side::kW) ++inside_w;
  }
  std::vector<std::size_t> comp(n, std::numeric_limits<std::size_t>::max());
  std::vector<Vertex> stack;
  std::size_t sum = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] != Side::kRest || comp[s] != std::numeric_limits<std::size_t>::max()) continue;
    const std::size_t id = w.components.size();
    w.components.emplace_back();
    std::size_t to_w = 0;
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      w.components[id].push_back(v);
      for (const auto& inc : g.incident(v)) {
        if (side[inc.neighbor] == Side::kW) {
          ++to_w;
        } else if (side[inc.neighbor] == Side::kRest &&
                   comp[inc.neighbor] == std::numeric_limits<std::size_t>::max()) {
          comp[inc.neighbor] = id;
          stack.push_back(inc.neighbor);
        }
      }
    }
    std::sort(w.components[id].begin(), w.components[id].end());
    sum += (b * w.components[id].size() + to_w) / 2;
  }
  w.value = b * w.U.size() + inside_w + sum;
  return w;
}

}  // namespace detail

/// b|U| + |E[W]| + sum over components K of G[V-U-W] of
/// floor((b|K| + |E[K,W]|) / 2). Always an upper bound on the maximum
/// b-matching size.
inline std::size_t dual_value(const Graph& g, std::size_t b, std::span<const Vertex> U,
                              std::span<const Vertex> W) {
  std::vector<detail::Side> side(g.vertex_count(), detail::Side::kRest);
  for (Vertex v : U) {
    if (v >= g.vertex_count()) throw std::invalid_argument("vertex out of range in U");
    side[v] = detail::Side::kU;
  }
  for (Vertex v : W) {
    if (v >= g.vertex_count()) throw std::invalid_argument("vertex out of range in W");
    if (side[v] == detail::Side::kU) {
      throw std::invalid_argument("U and W overlap at vertex " + std::to_string(v));
    }
    side[v] = detail::Side::kW;
  }
  return detail::evaluate_dual(g, b, side).value;
}

struct Certificate {
  std::size_t size = 0;
  DualWitness witness;
};

inline constexpr std::size_t kCertifyMaxVertices = 12;

/// Enumerates all 3^n assignments of vertices to U, W or neither and returns
/// the minimizing witness together with the maximum b-matching size. Throws
/// std::logic_error if the minimum differs from the b-matching optimum.
inline Certificate certify_optimal(const Graph& g, std::size_t b) {
  const std::size_t n = g.vertex_count();
  if (n > kCertifyMaxVertices) {
    throw InstanceTooLarge("certify_optimal needs n <= 12, got n=" + std::to_string(n));
  }
  const std::size_t size = maximum_b_matching(g, b).size;

  std::vector<std::uint32_t> nb(n, 0);
  for (const auto& e : g.edges()) {
    nb[e.u] |= 1u << e.v;
    nb[e.v] |= 1u << e.u;
  }
  std::size_t states = 1;
  for (std::size_t i = 0; i < n; ++i) states *= 3;

  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::uint32_t best_u = 0;
  std::uint32_t best_w = 0;
  for (std::size_t code = 0; code < states; ++code) {
    std::uint32_t um = 0;
    std::uint32_t wm = 0;
    std::size_t c = code;
    for (std::size_t v = 0; v < n; ++v, c /= 3) {
      if (c % 3 == 1) um |= 1u << v;
      if (c % 3 == 2) wm |= 1u << v;
    }
    std::size_t value = b * static_cast<std::size_t>(__builtin_popcount(um));
    std::size_t in_w2 = 0;
    for (std::uint32_t r = wm; r; r &= r - 1) in_w2 += __builtin_popcount(nb[__builtin_ctz(r)] & wm);
    value += in_w2 / 2;
    const std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1);
    std::uint32_t rest = all & ~um & ~wm;
    while (rest && value < best) {
      std::uint32_t comp = rest & (~rest + 1);
      std::uint32_t frontier = comp;
      while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t r = frontier; r; r &= r - 1) next |= nb[__builtin_ctz(r)];
        next &= rest & ~comp;
        comp |= next;
        frontier = next;
      }
      std::size_t to_w = 0;
      for (std::uint32_t r = comp; r; r &= r - 1) to_w += __builtin_popcount(nb[__builtin_ctz(r)] & wm);
      value += (b * static_cast<std::size_t>(__builtin_popcount(comp)) + to_w) / 2;
      rest &= ~comp;
    }
    if (value < best) {
      best = value;
      best_u = um;
      best_w = wm;
    }
  }

  std::vector<detail::Side> side(n, detail::Side::kRest);
  for (std::size_t v = 0; v < n; ++v) {
    if (best_u >> v & 1u) side[v] = detail::Side::kU;
    if (best_w >> v & 1u) side[v] = detail::Side::kW;
  }
  Certificate cert{size, detail::evaluate_dual(g, b, side)};
  if (cert.witness.value != size) {
    throw std::logic_error("duality gap: min-formula " + std::to_string(cert.witness.value) +
                           " != maximum b-matching " + std::to_string(size));
  }
  return cert;
}

/// True iff the maximum floor(1/p)-matching has at least (floor(1/p) - 1) * opt
/// edges, where opt is the exact expected maximum matching of a realization.
inline bool check_b_matching_lemma(const Graph& g, double p, double opt) {
  const std::size_t b = degree_cap(p);
  if (b == 1) return true;
  const double size = static_cast<double>(maximum_b_matching(g, b).size);
  return size >= static_cast<double>(b - 1) * opt - 1e-9;
}

/// Same check against a Monte-Carlo opt. A violation is reported only when it
/// persists at the lower end of the 95% confidence interval, so sampling noise
/// alone cannot fail the check.
inline bool check_b_matching_lemma(const Graph& g, double p, const Estimate& opt) {
  return check_b_matching_lemma(g, p, opt.ci95.first);
}

}  // namespace stochmatch
