#pragma once

// Immutable simple undirected graphs and edge subsets addressed by edge id.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stochmatch {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

/// Endpoints of an edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool touches(Vertex x) const { return x == u || x == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

class GraphError : public std::invalid_argument {
 public:
  enum class Kind {
    kSelfLoop,
    kDuplicateEdge,
    kVertexOutOfRange,
    kEdgeOutOfRange,
    kForeignEdgeSet,
    kMismatchedParents,
    kNotAMatching,
    kNotABMatching,
  };

  GraphError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Value handle to an immutable graph. Copies share the same underlying data,
/// and two handles compare `same_as` iff they refer to the same instance.
class Graph {
 public:
  Graph() : data_(std::make_shared<const Data>()) {}

  std::size_t vertex_count() const { return data_->n; }
  std::size_t edge_count() const { return data_->edges.size(); }

  const Edge& edge(EdgeId e) const { return data_->edges[e]; }
  std::span<const Edge> edges() const { return data_->edges; }

  /// Incident edges of v, sorted by neighbor id.
  std::span<const Incidence> incident(Vertex v) const {
    const auto& d = *data_;
    return {d.adjacency.data() + d.offsets[v], d.adjacency.data() + d.offsets[v + 1]};
  }

  std::size_t degree(Vertex v) const { return data_->offsets[v + 1] - data_->offsets[v]; }

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const {
    if (a >= vertex_count() || b >= vertex_count()) return std::nullopt;
    auto inc = incident(a);
    auto it = std::lower_bound(inc.begin(), inc.end(), b,
                               [](const Incidence& x, Vertex t) { return x.neighbor < t; });
    if (it != inc.end() && it->neighbor == b) return it->edge;
    return std::nullopt;
  }

  bool same_as(const Graph& other) const { return data_ == other.data_; }

  /// Structural equality: same vertex count and identical edge list.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.same_as(b) || (a.vertex_count() == b.vertex_count() &&
                            std::ranges::equal(a.edges(), b.edges()));
  }

 private:
  struct Data {
    std::size_t n = 0;
    std::vector<Edge> edges;
    std::vector<std::size_t> offsets{0};
    std::vector<Incidence> adjacency;
  };

  explicit Graph(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  friend Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs);
  friend Graph build_graph_unchecked(std::size_t n, std::vector<Edge> edges);

  static std::shared_ptr<const Data> assemble(std::size_t n, std::vector<Edge> edges) {
    auto d = std::make_shared<Data>();
    d->n = n;
    d->edges = std::move(edges);
    d->offsets.assign(n + 1, 0);
    for (const auto& e : d->edges) {
      ++d->offsets[e.u + 1];
      ++d->offsets[e.v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) d->offsets[i + 1] += d->offsets[i];
    d->adjacency.resize(2 * d->edges.size());
    std::vector<std::size_t> fill(d->offsets.begin(), d->offsets.end() - 1);
    // Edges are scanned in id order; sorting each list by neighbor keeps
    // iteration deterministic and allows binary search in find_edge.
    for (EdgeId id = 0; id < d->edges.size(); ++id) {
      const auto& e = d->edges[id];
      d->adjacency[fill[e.u]++] = {e.v, id};
      d->adjacency[fill[e.v]++] = {e.u, id};
    }
    for (std::size_t v = 0; v < n; ++v) {
      std::sort(d->adjacency.begin() + static_cast<std::ptrdiff_t>(d->offsets[v]),
                d->adjacency.begin() + static_cast<std::ptrdiff_t>(d->offsets[v + 1]),
                [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
    }
    return d;
  }

  std::shared_ptr<const Data> data_;
};

/// Validates and builds a graph. Edge ids are positions in `pairs`.
inline Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  if (n >= static_cast<std::size_t>(kNoVertex)) {
    throw GraphError(GraphError::Kind::kVertexOutOfRange, "vertex count too large");
  }
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [a, b] = pairs[i];
    if (a >= n || b >= n) {
      throw GraphError(GraphError::Kind::kVertexOutOfRange,
                       "edge " + std::to_string(i) + " (" + std::to_string(a) + "," +
                           std::to_string(b) + ") has an endpoint >= n=" + std::to_string(n));
    }
    if (a == b) {
      throw GraphError(GraphError::Kind::kSelfLoop,
                       "edge " + std::to_string(i) + " is a self-loop at " + std::to_string(a));
    }
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::vector<EdgeId> order(edges.size());
  for (EdgeId i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](EdgeId x, EdgeId y) { return edges[x] < edges[y]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (edges[order[i]] == edges[order[i - 1]]) {
      const auto& e = edges[order[i]];
      throw GraphError(GraphError::Kind::kDuplicateEdge,
                       "duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
  }
  return Graph(Graph::assemble(n, std::move(edges)));
}

inline Graph build_graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()));
}

inline Graph build_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(pairs));
}

/// For callers that already guarantee a simple graph with normalized edges
/// (derived graphs, generators).
inline Graph build_graph_unchecked(std::size_t n, std::vector<Edge> edges) {
  return Graph(Graph::assemble(n, std::move(edges)));
}

/// Sorted, duplicate-free set of edge ids of a parent graph.
class EdgeSet {
 public:
  EdgeSet() = default;

  EdgeSet(Graph parent, std::vector<EdgeId> ids) : parent_(std::move(parent)), ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    if (!ids_.empty() && ids_.back() >= parent_.edge_count()) {
      throw GraphError(GraphError::Kind::kEdgeOutOfRange,
                       "edge id " + std::to_string(ids_.back()) + " not in parent graph with m=" +
                           std::to_string(parent_.edge_count()));
    }
  }

  static EdgeSet all(const Graph& g) {
    std::vector<EdgeId> ids(g.edge_count());
    for (EdgeId i = 0; i < ids.size(); ++i) ids[i] = i;
    return EdgeSet(g, std::move(ids));
  }

  static EdgeSet none(const Graph& g) { return EdgeSet(g, {}); }

  /// Builds from a per-edge membership mask over the parent's edge ids.
  static EdgeSet from_mask(const Graph& g, const std::vector<bool>& mask) {
    std::vector<EdgeId> ids;
    for (EdgeId i = 0; i < mask.size() && i < g.edge_count(); ++i) {
      if (mask[i]) ids.push_back(i);
    }
    return EdgeSet(g, std::move(ids));
  }

  const Graph& parent() const { return parent_; }
  std::span<const EdgeId> ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  bool contains(EdgeId e) const { return std::binary_search(ids_.begin(), ids_.end(), e); }

  std::vector<bool> mask() const {
    std::vector<bool> m(parent_.edge_count(), false);
    for (EdgeId e : ids_) m[e] = true;
    return m;
  }

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) {
    return a.parent_.same_as(b.parent_) && a.ids_ == b.ids_;
  }

 private:
  Graph parent_;
  std::vector<EdgeId> ids_;
};

namespace detail {

inline void require_same_parent(const EdgeSet& a, const EdgeSet& b) {
  if (!a.parent().same_as(b.parent())) {
    throw GraphError(GraphError::Kind::kMismatchedParents, "edge sets belong to different graphs");
  }
}

}  // namespace detail

inline std::vector<std::size_t> degrees(const EdgeSet& s) {
  std::vector<std::size_t> deg(s.parent().vertex_count(), 0);
  for (EdgeId e : s) {
    ++deg[s.parent().edge(e).u];
    ++deg[s.parent().edge(e).v];
  }
  return deg;
}

inline std::size_t degree(const EdgeSet& s, Vertex v) {
  std::size_t d = 0;
  for (const auto& inc : s.parent().incident(v)) d += s.contains(inc.edge) ? 1 : 0;
  return d;
}

inline std::size_t max_degree(const EdgeSet& s) {
  auto deg = degrees(s);
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

inline std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
  return d;
}

inline bool is_b_matching(const EdgeSet& s, std::size_t b) {
  std::vector<std::size_t> deg(s.parent().vertex_count(), 0);
  for (EdgeId e : s) {
    const auto& ed = s.parent().edge(e);
    if (++deg[ed.u] > b || ++deg[ed.v] > b) return false;
  }
  return true;
}

inline bool is_matching(const EdgeSet& s) { return is_b_matching(s, 1); }

inline EdgeSet edge_union(const EdgeSet& a, const EdgeSet& b) {
  detail::require_same_parent(a, b);
  std::vector<EdgeId> ids;
  ids.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(ids));
  return EdgeSet(a.parent(), std::move(ids));
}

inline EdgeSet edge_difference(const EdgeSet& a, const EdgeSet& b) {
  detail::require_same_parent(a, b);
  std::vector<EdgeId> ids;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(ids));
  return EdgeSet(a.parent(), std::move(ids));
}

inline EdgeSet edge_intersection(const EdgeSet& a, const EdgeSet& b) {
  detail::require_same_parent(a, b);
  std::vector<EdgeId> ids;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(ids));
  return EdgeSet(a.parent(), std::move(ids));
}

/// A graph obtained from a parent by deleting edges, with the id mapping back.
struct DerivedGraph {
  Graph graph;
  std::vector<EdgeId> to_parent;  // to_parent[new id] = parent id
  Graph parent;

  /// Maps an edge set of the derived graph to the same edges of the parent.
  EdgeSet lift(const EdgeSet& s) const {
    if (!s.parent().same_as(graph)) {
      throw GraphError(GraphError::Kind::kForeignEdgeSet, "edge set is not over the derived graph");
    }
    std::vector<EdgeId> ids;
    ids.reserve(s.size());
    for (EdgeId e : s) ids.push_back(to_parent[e]);
    return EdgeSet(parent, std::move(ids));
  }
};

/// Same vertex set, edges E \ x, kept in increasing parent-id order.
inline DerivedGraph remove_edges(const Graph& g, const EdgeSet& x) {
  if (!x.parent().same_as(g)) {
    throw GraphError(GraphError::Kind::kForeignEdgeSet, "edge set does not belong to this graph");
  }
  std::vector<Edge> edges;
  std::vector<EdgeId> map;
  edges.reserve(g.edge_count() - x.size());
  map.reserve(g.edge_count() - x.size());
  auto it = x.begin();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (it != x.end() && *it == e) {
      ++it;
      continue;
    }
    edges.push_back(g.edge(e));
    map.push_back(e);
  }
  return {build_graph_unchecked(g.vertex_count(), std::move(edges)), std::move(map), g};
}

/// The graph (V, s) with ids mapped back to s's parent.
inline DerivedGraph edge_subgraph(const EdgeSet& s) {
  return remove_edges(s.parent(), edge_difference(EdgeSet::all(s.parent()), s));
}

/// An edge set in which no two edges share an endpoint.
class Matching {
 public:
  Matching() = default;

  explicit Matching(EdgeSet edges) : edges_(std::move(edges)) {
    if (!is_matching(edges_)) {
      throw GraphError(GraphError::Kind::kNotAMatching, "edge set is not a matching");
    }
  }

  static Matching empty(const Graph& g) { return Matching(EdgeSet::none(g)); }

  const EdgeSet& edges() const { return edges_; }
  const Graph& parent() const { return edges_.parent(); }
  std::size_t size() const { return edges_.size(); }
  bool contains(EdgeId e) const { return edges_.contains(e); }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

  /// mate[v] = matched partner of v or kNoVertex.
  std::vector<Vertex> mates() const {
    std::vector<Vertex> mate(parent().vertex_count(), kNoVertex);
    for (EdgeId e : edges_) {
      const auto& ed = parent().edge(e);
      mate[ed.u] = ed.v;
      mate[ed.v] = ed.u;
    }
    return mate;
  }

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  EdgeSet edges_;
};

/// An edge set with every vertex incident to at most b members.
class BMatching {
 public:
  BMatching() = default;

  BMatching(EdgeSet edges, std::size_t b) : edges_(std::move(edges)), b_(b) {
    if (b_ < 1 || !is_b_matching(edges_, b_)) {
      throw GraphError(GraphError::Kind::kNotABMatching,
                       "edge set is not a " + std::to_string(b_) + "-matching");
    }
  }

  const EdgeSet& edges() const { return edges_; }
  std::size_t b() const { return b_; }
  std::size_t size() const { return edges_.size(); }

 private:
  EdgeSet edges_;
  std::size_t b_ = 1;
};

}  // namespace stochmatch
