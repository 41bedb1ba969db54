#pragma once

// Instance generators. All random generators are deterministic per seed and
// avoid std distributions, whose output differs between standard libraries.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stochmatch/graph.hpp"

namespace stochmatch {

namespace detail {

inline double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace detail

/// G(n, q): each unordered pair independently with probability q.
inline Graph erdos_renyi(std::size_t n, double q, std::uint64_t seed) {
  if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("q must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (detail::unit_double(rng) < q) edges.push_back({u, v});
    }
  }
  return build_graph_unchecked(n, std::move(edges));
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n ? n - 1 : 0) / 2);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return build_graph_unchecked(n, std::move(edges));
}

/// K_{a,b} on parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  edges.reserve(a * b);
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) edges.push_back({u, static_cast<Vertex>(a + v)});
  }
  return build_graph_unchecked(a + b, std::move(edges));
}

/// Path 0 - 1 - ... - (n-1).
inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
  return build_graph_unchecked(n, std::move(edges));
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
  edges.push_back({0, static_cast<Vertex>(n - 1)});
  return build_graph_unchecked(n, std::move(edges));
}

/// K_{1,k} with center 0.
inline Graph star_graph(std::size_t k) { return complete_bipartite(1, k); }

struct HardInstanceSpec {
  std::size_t N = 1000;
  double p = 0.5;
  double cstar = 0.56;
  std::uint64_t seed = 0;

  std::size_t small_block() const { return static_cast<std::size_t>(std::llround((1.0 - cstar) * N)); }
};

/// Contiguous id ranges [begin, end) of the four blocks.
struct HardInstanceLayout {
  std::size_t N = 0;
  std::size_t k = 0;  // |L2| = |R2|
  std::pair<Vertex, Vertex> L1, L2, R1, R2;
  std::size_t dense_edges = 0;
  std::size_t sparse_edges = 0;

  /// Vertices per side, |L1| + |L2|.
  std::size_t side() const { return N + k; }
};

struct HardInstance {
  Graph graph;
  HardInstanceLayout layout;
};

inline HardInstanceLayout hard_instance_layout(const HardInstanceSpec& spec) {
  HardInstanceLayout lay;
  lay.N = spec.N;
  lay.k = spec.small_block();
  const auto N = static_cast<Vertex>(spec.N);
  const auto k = static_cast<Vertex>(lay.k);
  lay.L1 = {0, N};
  lay.L2 = {N, N + k};
  lay.R1 = {N + k, 2 * N + k};
  lay.R2 = {2 * N + k, 2 * N + 2 * k};
  return lay;
}

/// K(L1, R2) + K(L2, R1) + a random L1-R1 block with pair probability 1/(pN).
inline HardInstance hard_instance(const HardInstanceSpec& spec) {
  if (spec.N < 10) throw std::invalid_argument("hard instance needs N >= 10");
  if (!(spec.p > 0.0 && spec.p < 1.0)) throw std::invalid_argument("p must lie in (0, 1)");
  if (!(spec.cstar > 0.0 && spec.cstar < 1.0)) throw std::invalid_argument("cstar must lie in (0, 1)");
  const double q = 1.0 / (spec.p * static_cast<double>(spec.N));
  if (q > 1.0) throw std::invalid_argument("sparse-block probability 1/(pN) exceeds 1");

  auto lay = hard_instance_layout(spec);
  std::vector<Edge> edges;
  for (Vertex l = lay.L1.first; l < lay.L1.second; ++l) {
    for (Vertex r = lay.R2.first; r < lay.R2.second; ++r) edges.push_back({l, r});
  }
  for (Vertex l = lay.L2.first; l < lay.L2.second; ++l) {
    for (Vertex r = lay.R1.first; r < lay.R1.second; ++r) edges.push_back({l, r});
  }
  lay.dense_edges = edges.size();
  std::mt19937_64 rng(spec.seed);
  for (Vertex l = lay.L1.first; l < lay.L1.second; ++l) {
    for (Vertex r = lay.R1.first; r < lay.R1.second; ++r) {
      if (detail::unit_double(rng) < q) edges.push_back({l, r});
    }
  }
  lay.sparse_edges = edges.size() - lay.dense_edges;
  return {build_graph_unchecked(lay.R2.second, std::move(edges)), lay};
}

/// Upper bound on any b-matching of the hard instance: at most b edges per
/// vertex of L2 and R2, plus every sparse edge.
inline std::size_t hard_instance_b_matching_bound(const HardInstance& h, std::size_t b) {
  return b * 2 * h.layout.k + h.layout.sparse_edges;
}

}  // namespace stochmatch
