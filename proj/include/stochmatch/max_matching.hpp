#pragma once

// Maximum cardinality matching in general graphs (Edmonds' blossom algorithm).
//
// Each exposed vertex is searched once with a BFS alternating forest rooted at
// it, contracting odd cycles through a base[] array. When a search fails the
// whole alternating tree is deleted for the rest of the run: no later
// augmenting path can pass through a Hungarian tree. Searches only touch the
// vertices they reach, so the cost of a search is proportional to the explored
// region rather than to n.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "stochmatch/graph.hpp"

namespace stochmatch {

struct MatchingResult {
  Matching matching;
  std::vector<Vertex> mate;  // kNoVertex when unmatched
};

/// Reusable workspace for repeated matchings on raw edge lists. Not
/// thread-safe; use one instance per thread.
class MatchingSolver {
 public:
  /// Computes a maximum matching of the graph ({0..n-1}, edges). The edge list
  /// must be simple. If `initial` is non-empty it must be a valid mate array
  /// of a matching of this graph; otherwise a greedy matching seeds the search.
  std::size_t solve(std::size_t n, std::span<const Edge> edges,
                    std::span<const Vertex> initial = {}) {
    build(n, edges);
    if (initial.empty()) {
      greedy_init();
    } else {
      mate_.assign(initial.begin(), initial.end());
    }
    augment_all();
    std::size_t size = 0;
    for (Vertex v = 0; v < n_; ++v) size += (mate_[v] != kNoVertex && v < mate_[v]) ? 1 : 0;
    return size;
  }

  /// Mate array of the last solve.
  std::span<const Vertex> mate() const { return mate_; }

 private:
  enum Label : std::uint8_t { kUnlabeled = 0, kEven = 1, kOdd = 2 };

  void build(std::size_t n, std::span<const Edge> edges) {
    n_ = n;
    offsets_.assign(n + 1, 0);
    for (const auto& e : edges) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
    adj_.resize(2 * edges.size());
    fill_.assign(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges) {
      adj_[fill_[e.u]++] = e.v;
      adj_[fill_[e.v]++] = e.u;
    }
    mate_.assign(n, kNoVertex);
    parent_.assign(n, kNoVertex);
    base_.resize(n);
    for (Vertex v = 0; v < n; ++v) base_[v] = v;
    label_.assign(n, kUnlabeled);
    dead_.assign(n, 0);
    in_blossom_.assign(n, 0);
    lca_mark_.assign(n, 0);
    lca_stamp_ = 0;
  }

  std::size_t deg(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  // Visit vertices by increasing degree and match each to its free neighbor
  // of smallest degree (ties by id).
  void greedy_init() {
    std::size_t max_deg = 0;
    for (Vertex v = 0; v < n_; ++v) max_deg = std::max(max_deg, deg(v));
    std::vector<std::size_t> bucket(max_deg + 2, 0);
    for (Vertex v = 0; v < n_; ++v) ++bucket[deg(v) + 1];
    for (std::size_t i = 0; i + 1 < bucket.size(); ++i) bucket[i + 1] += bucket[i];
    std::vector<Vertex> order(n_);
    for (Vertex v = 0; v < n_; ++v) order[bucket[deg(v)]++] = v;
    for (Vertex v : order) {
      if (mate_[v] != kNoVertex) continue;
      Vertex best = kNoVertex;
      for (std::size_t i = offsets_[v]; i < offsets_[v + 1]; ++i) {
        Vertex w = adj_[i];
        if (mate_[w] != kNoVertex) continue;
        if (best == kNoVertex || deg(w) < deg(best) || (deg(w) == deg(best) && w < best)) best = w;
      }
      if (best != kNoVertex) {
        mate_[v] = best;
        mate_[best] = v;
      }
    }
  }

  void augment_all() {
    for (Vertex root = 0; root < n_; ++root) {
      if (mate_[root] != kNoVertex || dead_[root] || deg(root) == 0) continue;
      Vertex end = search(root);
      if (end != kNoVertex) {
        flip(end);
        reset_touched();
      } else {
        for (Vertex v : touched_) dead_[v] = 1;
        reset_touched();
      }
    }
  }

  // A vertex is recorded as touched the first time it gets a label.
  void set_label(Vertex v, Label l) {
    if (label_[v] == kUnlabeled) touched_.push_back(v);
    label_[v] = l;
  }

  void reset_touched() {
    for (Vertex v : touched_) {
      label_[v] = kUnlabeled;
      parent_[v] = kNoVertex;
      base_[v] = v;
    }
    touched_.clear();
    queue_.clear();
  }

  Vertex lowest_common_base(Vertex a, Vertex b) {
    ++lca_stamp_;
    if (lca_stamp_ == 0) {
      std::fill(lca_mark_.begin(), lca_mark_.end(), 0);
      lca_stamp_ = 1;
    }
    for (;;) {
      a = base_[a];
      lca_mark_[a] = lca_stamp_;
      if (mate_[a] == kNoVertex) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (lca_mark_[b] == lca_stamp_) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  void contract(Vertex v, Vertex w) {
    Vertex b = lowest_common_base(v, w);
    mark_path(v, b, w);
    mark_path(w, b, v);
    // Only labeled vertices can be inside the blossom.
    const std::size_t count = touched_.size();
    for (std::size_t i = 0; i < count; ++i) {
      Vertex x = touched_[i];
      if (in_blossom_[base_[x]]) {
        base_[x] = b;
        if (label_[x] != kEven) {
          label_[x] = kEven;
          queue_.push_back(x);
        }
      }
    }
    for (std::size_t i = 0; i < count; ++i) in_blossom_[touched_[i]] = 0;
  }

  Vertex search(Vertex root) {
    set_label(root, kEven);
    queue_.push_back(root);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      Vertex v = queue_[head];
      for (std::size_t i = offsets_[v]; i < offsets_[v + 1]; ++i) {
        Vertex w = adj_[i];
        if (dead_[w] || base_[v] == base_[w] || mate_[v] == w) continue;
        if (label_[w] == kEven) {
          contract(v, w);
        } else if (label_[w] == kUnlabeled) {
          parent_[w] = v;
          if (mate_[w] == kNoVertex) {
            set_label(w, kOdd);
            return w;
          }
          set_label(w, kOdd);
          set_label(mate_[w], kEven);
          queue_.push_back(mate_[w]);
        }
      }
    }
    return kNoVertex;
  }

  void flip(Vertex w) {
    while (w != kNoVertex) {
      Vertex pv = parent_[w];
      Vertex next = mate_[pv];
      mate_[w] = pv;
      mate_[pv] = w;
      w = next;
    }
  }

  std::size_t n_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> fill_;
  std::vector<Vertex> adj_;
  std::vector<Vertex> mate_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<Label> label_;
  std::vector<std::uint8_t> dead_;
  std::vector<std::uint8_t> in_blossom_;
  std::vector<std::uint32_t> lca_mark_;
  std::uint32_t lca_stamp_ = 0;
  std::vector<Vertex> touched_;
  std::vector<Vertex> queue_;
};

inline MatchingResult maximum_matching(const Graph& g) {
  MatchingSolver solver;
  solver.solve(g.vertex_count(), g.edges());
  std::vector<Vertex> mate(solver.mate().begin(), solver.mate().end());
  std::vector<EdgeId> ids;
  for (Vertex v = 0; v < mate.size(); ++v) {
    if (mate[v] != kNoVertex && v < mate[v]) ids.push_back(*g.find_edge(v, mate[v]));
  }
  return {Matching(EdgeSet(g, std::move(ids))), std::move(mate)};
}

/// mu(s): maximum matching size of the subgraph formed by an edge subset.
inline std::size_t matching_number(const EdgeSet& s) {
  std::vector<Edge> edges;
  edges.reserve(s.size());
  for (EdgeId e : s) edges.push_back(s.parent().edge(e));
  MatchingSolver solver;
  return solver.solve(s.parent().vertex_count(), edges);
}

inline std::size_t matching_number(const Graph& g) {
  MatchingSolver solver;
  return solver.solve(g.vertex_count(), g.edges());
}

}  // namespace stochmatch
