#pragma once

// Proper edge coloring with at most Delta+1 colors (Misra-Gries fan rotation)
// and the resulting decomposition of an edge set into matchings.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "stochmatch/graph.hpp"

namespace stochmatch {

struct EdgeColoring {
  std::vector<std::uint32_t> colors;  // per edge id
  std::size_t palette_size = 0;       // 1 + largest color used, 0 if no edges
};

namespace detail {

class FanColorer {
 public:
  explicit FanColorer(const Graph& g)
      : g_(g), palette_(max_degree(g) + 1), color_(g.edge_count(), kNone),
        at_(g.vertex_count() * palette_, kNoEdge), in_fan_(g.vertex_count(), 0) {}

  EdgeColoring run() {
    for (EdgeId e = 0; e < g_.edge_count(); ++e) color_edge(e);
    EdgeColoring out;
    out.colors = std::move(color_);
    for (auto c : out.colors) out.palette_size = std::max<std::size_t>(out.palette_size, c + 1);
    return out;
  }

 private:
  static constexpr std::uint32_t kNone = ~0u;

  bool is_free(Vertex x, std::uint32_t c) const { return at_[x * palette_ + c] == kNoEdge; }

  std::uint32_t first_free(Vertex x) const {
    for (std::uint32_t c = 0;; ++c) {
      if (is_free(x, c)) return c;
    }
  }

  void set(EdgeId e, std::uint32_t c) {
    const auto& ed = g_.edge(e);
    color_[e] = c;
    at_[ed.u * palette_ + c] = e;
    at_[ed.v * palette_ + c] = e;
  }

  void unset(EdgeId e) {
    const auto& ed = g_.edge(e);
    at_[ed.u * palette_ + color_[e]] = kNoEdge;
    at_[ed.v * palette_ + color_[e]] = kNoEdge;
    color_[e] = kNone;
  }

  void color_edge(EdgeId e0) {
    const Vertex u = g_.edge(e0).u;
    // Maximal fan: f[i+1] is joined to u by an edge whose color is free at f[i].
    fan_.assign(1, g_.edge(e0).v);
    fan_edge_.assign(1, e0);
    in_fan_[fan_[0]] = 1;
    for (bool grown = true; grown;) {
      grown = false;
      const Vertex last = fan_.back();
      for (std::uint32_t c = 0; c < palette_; ++c) {
        const EdgeId e = at_[u * palette_ + c];
        if (e == kNoEdge || !is_free(last, c)) continue;
        const Vertex x = g_.edge(e).other(u);
        if (in_fan_[x]) continue;
        fan_.push_back(x);
        fan_edge_.push_back(e);
        in_fan_[x] = 1;
        grown = true;
        break;
      }
    }
    for (Vertex x : fan_) in_fan_[x] = 0;

    const std::uint32_t c = first_free(u);
    const std::uint32_t d = first_free(fan_.back());
    invert_path(u, d, c);

    // First fan vertex with d free such that the prefix is still a fan.
    std::size_t w = 0;
    for (std::size_t i = 0; i < fan_.size(); ++i) {
      if (i > 0 && !is_free(fan_[i - 1], color_[fan_edge_[i]])) break;
      w = i;
      if (is_free(fan_[i], d)) break;
    }

    std::vector<std::uint32_t> shifted(w);
    for (std::size_t i = 0; i < w; ++i) shifted[i] = color_[fan_edge_[i + 1]];
    for (std::size_t i = 1; i <= w; ++i) unset(fan_edge_[i]);
    for (std::size_t i = 0; i < w; ++i) set(fan_edge_[i], shifted[i]);
    set(fan_edge_[w], d);
  }

  // Swaps colors a and b on the maximal path from x starting with color a.
  void invert_path(Vertex x, std::uint32_t a, std::uint32_t b) {
    if (a == b) return;
    path_.clear();
    std::uint32_t want = a;
    for (EdgeId e = at_[x * palette_ + want]; e != kNoEdge; e = at_[x * palette_ + want]) {
      path_.push_back(e);
      x = g_.edge(e).other(x);
      want = want == a ? b : a;
    }
    std::vector<std::uint32_t> old(path_.size());
    for (std::size_t i = 0; i < path_.size(); ++i) old[i] = color_[path_[i]];
    for (EdgeId e : path_) unset(e);
    for (std::size_t i = 0; i < path_.size(); ++i) set(path_[i], old[i] == a ? b : a);
  }

  const Graph& g_;
  std::size_t palette_;
  std::vector<std::uint32_t> color_;
  std::vector<EdgeId> at_;  // at_[x * palette + c] = edge of color c at x
  std::vector<std::uint8_t> in_fan_;
  std::vector<Vertex> fan_;
  std::vector<EdgeId> fan_edge_;
  std::vector<EdgeId> path_;
};

}  // namespace detail

/// Proper edge coloring of g using at most max_degree(g)+1 colors.
inline EdgeColoring vizing_color(const Graph& g) { return detail::FanColorer(g).run(); }

/// True iff no two edges sharing an endpoint have the same color.
inline bool is_proper_coloring(const Graph& g, const EdgeColoring& c) {
  if (c.colors.size() != g.edge_count()) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<std::uint32_t> seen;
    for (const auto& inc : g.incident(v)) seen.push_back(c.colors[inc.edge]);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

/// Color classes of s, as matchings of s's parent. Empty classes are dropped.
inline std::vector<Matching> decompose_into_matchings(const EdgeSet& s) {
  auto sub = edge_subgraph(s);
  auto coloring = vizing_color(sub.graph);
  std::vector<std::vector<EdgeId>> classes(coloring.palette_size);
  for (EdgeId e = 0; e < sub.graph.edge_count(); ++e) classes[coloring.colors[e]].push_back(sub.to_parent[e]);
  std::vector<Matching> out;
  for (auto& ids : classes) {
    if (!ids.empty()) out.emplace_back(EdgeSet(s.parent(), std::move(ids)));
  }
  return out;
}

}  // namespace stochmatch
