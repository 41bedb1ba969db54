#pragma once

// Bernoulli edge realizations, Monte-Carlo estimates of the expected maximum
// matching size, and the exact enumeration oracle.
//
// Coins are counter based: the coin of parent edge e in trial t on channel k
// is a hash of (seed, t, k, e). Trials can therefore run in any order or on
// any number of threads and still produce identical results.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "stochmatch/brute_force.hpp"
#include "stochmatch/estimate.hpp"
#include "stochmatch/graph.hpp"
#include "stochmatch/max_matching.hpp"

namespace stochmatch {

namespace detail {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// A deterministic source of independent coins for one (seed, trial, channel).
class RealizationStream {
 public:
  RealizationStream(std::uint64_t seed, std::uint64_t trial, std::uint64_t channel = 0)
      : key_(detail::splitmix64(detail::splitmix64(detail::splitmix64(seed) ^ trial) ^ channel)) {}

  /// Uniform in [0, 1) for the coin labelled `index`.
  double uniform(std::uint64_t index) const {
    return static_cast<double>(detail::splitmix64(key_ ^ detail::splitmix64(index)) >> 11) * 0x1.0p-53;
  }

  bool coin(std::uint64_t index, double p) const { return uniform(index) < p; }

 private:
  std::uint64_t key_;
};

/// Per-edge flags over s's parent ids; only members of s can be true.
inline std::vector<bool> realize(const EdgeSet& s, double p, const RealizationStream& stream) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  std::vector<bool> out(s.parent().edge_count(), false);
  for (EdgeId e : s) out[e] = stream.coin(e, p);
  return out;
}

namespace detail {

// Runs body(trial, solver) for every trial, split into contiguous blocks.
template <class Body>
void for_trials(std::size_t trials, unsigned threads, Body&& body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(trials)));
  auto run = [&](std::size_t lo, std::size_t hi) {
    MatchingSolver solver;
    std::vector<Edge> scratch;
    for (std::size_t t = lo; t < hi; ++t) body(t, solver, scratch);
  };
  if (threads == 1) {
    run(0, trials);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (trials + threads - 1) / threads;
  for (unsigned i = 0; i < threads; ++i) {
    const std::size_t lo = i * chunk;
    const std::size_t hi = std::min(trials, lo + chunk);
    if (lo < hi) pool.emplace_back(run, lo, hi);
  }
  for (auto& th : pool) th.join();
}

inline std::size_t realized_matching(const EdgeSet& s, double p, const RealizationStream& stream,
                                     MatchingSolver& solver, std::vector<Edge>& scratch) {
  scratch.clear();
  for (EdgeId e : s) {
    if (stream.coin(e, p)) scratch.push_back(s.parent().edge(e));
  }
  return solver.solve(s.parent().vertex_count(), scratch);
}

inline void require_trials(std::size_t trials) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
}

}  // namespace detail

/// Mean of mu(s_p) over `trials` realizations; trial t uses stream (seed, t).
inline Estimate estimate_expected_matching(const EdgeSet& s, double p, std::size_t trials,
                                           std::uint64_t seed, unsigned threads = 1) {
  detail::require_trials(trials);
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  std::vector<double> x(trials);
  detail::for_trials(trials, threads, [&](std::size_t t, MatchingSolver& solver, std::vector<Edge>& scratch) {
    x[t] = static_cast<double>(detail::realized_matching(s, p, RealizationStream(seed, t), solver, scratch));
  });
  return summarize(x, seed);
}

inline Estimate estimate_expected_matching(const Graph& g, double p, std::size_t trials,
                                           std::uint64_t seed, unsigned threads = 1) {
  return estimate_expected_matching(EdgeSet::all(g), p, trials, seed, threads);
}

/// Sum over all subsets S of s of p^|S| (1-p)^(m-|S|) mu(S). Needs |s| <= 24.
inline double exact_expected_matching(const EdgeSet& s, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  detail::require_small(s.size());
  std::vector<Edge> edges;
  for (EdgeId e : s) edges.push_back(s.parent().edge(e));
  const auto table = matching_number_table(edges);
  const std::size_t m = edges.size();
  std::vector<double> weight(m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    weight[k] = std::pow(p, static_cast<double>(k)) * std::pow(1.0 - p, static_cast<double>(m - k));
  }
  // Accumulate per subset size first, then combine.
  std::vector<std::uint64_t> by_size(m + 1, 0);
  for (std::uint32_t mask = 0; mask < table.size(); ++mask) by_size[__builtin_popcount(mask)] += table[mask];
  std::vector<double> terms(m + 1);
  for (std::size_t k = 0; k <= m; ++k) terms[k] = weight[k] * static_cast<double>(by_size[k]);
  return detail::compensated_sum(terms);
}

inline double exact_expected_matching(const Graph& g, double p) {
  return exact_expected_matching(EdgeSet::all(g), p);
}

enum class Pairing {
  kPaired,       // H_p = G_p restricted to H
  kIndependent,  // H and G realized on separate channels
};

/// alg = E[mu(h_p)], opt = E[mu(g_p)] and their ratio. In paired mode both
/// come from the same coins, so mu(h_p) <= mu(g_p) must hold in every trial.
inline RatioEstimate estimate_ratio(const Graph& g, const EdgeSet& h, double p, std::size_t trials,
                                    std::uint64_t seed, Pairing pairing = Pairing::kPaired,
                                    unsigned threads = 1) {
  detail::require_trials(trials);
  if (!h.parent().same_as(g)) {
    throw GraphError(GraphError::Kind::kForeignEdgeSet, "h is not an edge set of g");
  }
  const EdgeSet all = EdgeSet::all(g);
  std::vector<double> a(trials);
  std::vector<double> o(trials);
  std::vector<std::uint8_t> violated(trials, 0);
  detail::for_trials(trials, threads, [&](std::size_t t, MatchingSolver& solver, std::vector<Edge>& scratch) {
    const RealizationStream opt_stream(seed, t, 0);
    const RealizationStream alg_stream(seed, t, pairing == Pairing::kPaired ? 0 : 1);
    o[t] = static_cast<double>(detail::realized_matching(all, p, opt_stream, solver, scratch));
    a[t] = static_cast<double>(detail::realized_matching(h, p, alg_stream, solver, scratch));
    if (pairing == Pairing::kPaired && a[t] > o[t]) violated[t] = 1;
  });
  for (std::size_t t = 0; t < trials; ++t) {
    if (violated[t]) throw std::logic_error("mu(H_p) > mu(G_p) on paired trial " + std::to_string(t));
  }

  RatioEstimate r;
  r.alg = summarize(a, seed);
  r.opt = summarize(o, seed);
  if (!(r.opt.mean > 0.0)) throw std::domain_error("opt estimate is not positive");
  r.ratio = r.alg.mean / r.opt.mean;

  double cov = 0.0;
  if (pairing == Pairing::kPaired && trials > 1) {
    std::vector<double> prod(trials);
    for (std::size_t t = 0; t < trials; ++t) prod[t] = (a[t] - r.alg.mean) * (o[t] - r.opt.mean);
    cov = detail::compensated_sum(prod) / static_cast<double>(trials - 1) / static_cast<double>(trials);
  }
  // First-order propagation for a/o.
  const double om = r.opt.mean;
  const double var = r.alg.std_error * r.alg.std_error / (om * om) +
                     r.ratio * r.ratio * r.opt.std_error * r.opt.std_error / (om * om) -
                     2.0 * r.ratio * cov / (om * om);
  r.ratio_stderr = std::sqrt(std::max(0.0, var));
  return r;
}

}  // namespace stochmatch
