#pragma once

// Property suites behind `stochmatch verify` and the acceptance binary.
// Each suite returns named checks; informational checks never fail a suite.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stochmatch/experiment.hpp"
#include "stochmatch/stochmatch.hpp"

namespace stochmatch {

struct CheckResult {
  std::string name;
  bool passed = true;
  bool informational = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0.0;
  nlohmann::json data = nlohmann::json::object();

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.informational && !c.passed) return false;
    }
    return true;
  }

  /// True iff every non-informational check whose name starts with prefix passed.
  bool passed(const std::string& prefix) const {
    for (const auto& c : checks) {
      if (!c.informational && !c.passed && c.name.rfind(prefix, 0) == 0) return false;
    }
    return true;
  }

  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, false, std::move(detail)});
  }
  void note(std::string name, std::string detail) {
    checks.push_back({std::move(name), true, true, std::move(detail)});
  }
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool quick = false;  // smaller counts and instances, for smoke runs
};

inline nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"informational", c.informational}, {"detail", c.detail}});
  }
  return {{"suite", r.suite}, {"passed", r.passed()}, {"seconds", r.seconds}, {"checks", checks}, {"data", r.data}};
}

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t i) { return splitmix64(base * 0x9E3779B97F4A7C15ull + i); }

inline std::string str(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

template <class Fn>
SuiteReport timed(const std::string& name, Fn&& body) {
  SuiteReport r;
  r.suite = name;
  const auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// Deterministic random graph with n in [lo, hi] and at most max_m edges.
inline Graph small_random_graph(std::size_t lo, std::size_t hi, std::size_t max_m, std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::uint64_t s = mix_seed(seed, attempt);
    const std::size_t n = lo + s % (hi - lo + 1);
    const double q = 0.15 + 0.7 * static_cast<double>((s >> 20) % 1000) / 1000.0;
    auto g = erdos_renyi(n, q, s);
    if (g.edge_count() <= max_m) return g;
  }
}

}  // namespace detail

/// Blossom against brute force, gadget b-matching against brute force and
/// against the min-formula certificate.
inline SuiteReport verify_oracles(const VerifyOptions& opt = {}) {
  return detail::timed("oracles", [&](SuiteReport& r) {
    std::size_t graphs = 0;
    std::size_t bad = 0;
    for (std::size_t n = 0; n <= 5; ++n) {
      std::vector<std::pair<Vertex, Vertex>> all;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
      }
      for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
        std::vector<std::pair<Vertex, Vertex>> pick;
        for (std::size_t i = 0; i < all.size(); ++i) {
          if (mask >> i & 1u) pick.push_back(all[i]);
        }
        auto g = build_graph(n, pick);
        auto m = maximum_matching(g);
        bad += m.matching.size() != brute_force_maximum_matching(g) || !is_matching(m.matching.edges());
        ++graphs;
      }
    }
    r.add("matching-exhaustive", bad == 0, std::to_string(graphs) + " graphs, " + std::to_string(bad) + " mismatches");

    const std::size_t random_count = opt.quick ? 100 : 500;
    bad = 0;
    for (std::size_t i = 0; i < random_count; ++i) {
      auto g = detail::small_random_graph(6, 8, kBruteForceMaxEdges, detail::mix_seed(opt.seed, i));
      bad += matching_number(g) != brute_force_maximum_matching(g);
    }
    r.add("matching-random", bad == 0, std::to_string(random_count) + " graphs, " + std::to_string(bad) + " mismatches");

    const std::size_t bf_count = opt.quick ? 60 : 300;
    bad = 0;
    for (std::size_t i = 0; i < bf_count; ++i) {
      auto g = detail::small_random_graph(3, 8, 20, detail::mix_seed(opt.seed + 1, i));
      const std::size_t b = 1 + i % 3;
      auto res = maximum_b_matching(g, b);
      bad += res.size != brute_force_maximum_b_matching(g, b) || !is_b_matching(res.bmatching.edges(), b);
    }
    r.add("bmatching-bruteforce", bad == 0, std::to_string(bf_count) + " pairs, " + std::to_string(bad) + " mismatches");

    const std::size_t dual_count = opt.quick ? 40 : 200;
    bad = 0;
    for (std::size_t i = 0; i < dual_count; ++i) {
      const std::uint64_t s = detail::mix_seed(opt.seed + 2, i);
      auto g = erdos_renyi(4 + s % 7, 0.2 + 0.5 * static_cast<double>(i % 10) / 10.0, s);
      const std::size_t b = 1 + i % 3;
      auto cert = certify_optimal(g, b);
      bad += cert.witness.value != cert.size || dual_value(g, b, cert.witness.U, cert.witness.W) != cert.size;
    }
    r.add("bmatching-duality", bad == 0, std::to_string(dual_count) + " pairs, " + std::to_string(bad) + " mismatches");
  });
}

/// max b-matching >= (b - 1) opt with the exact expectation oracle.
inline SuiteReport verify_bmatching_lemma(const VerifyOptions& opt = {}) {
  return detail::timed("bmatching-lemma", [&](SuiteReport& r) {
    const std::size_t count = opt.quick ? 40 : 200;
    std::size_t failures = 0;
    double tightest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < count; ++i) {
      auto g = detail::small_random_graph(5, 12, 20, detail::mix_seed(opt.seed + 3, i));
      for (double p : {0.2, 0.3, 0.5}) {
        const double exact = exact_expected_matching(g, p);
        if (!check_b_matching_lemma(g, p, exact)) ++failures;
        if (exact > 0.0) {
          const double b = static_cast<double>(degree_cap(p));
          tightest = std::min(tightest, static_cast<double>(maximum_b_matching(g, degree_cap(p)).size) /
                                            ((b - 1.0) * exact));
        }
      }
    }
    r.add("lemma", failures == 0,
          std::to_string(count) + " graphs x 3 p, " + std::to_string(failures) + " failures");
    r.note("lemma-slack", "min |B| / ((b-1) opt) = " + detail::str(tightest));
  });
}

/// The analytic inequalities, the allocation program and the LP.
inline SuiteReport verify_bounds(const VerifyOptions& = {}) {
  return detail::timed("bounds", [&](SuiteReport& r) {
    std::size_t fails = 0;
    std::size_t points = 0;
    for (int i = 1; i <= 40; ++i) {
      const double c = 0.25 * i;
      for (int j = 0; j <= 24; ++j, ++points) fails += !check_prop_upper_exp(c * j / 24.0, c);
    }
    r.add("prop-upper-exp", fails == 0, std::to_string(points) + " points, " + std::to_string(fails) + " failures");

    fails = 0;
    for (int i = 1; i <= 1000; ++i) fails += !check_prop_upper_exp2(0.43 * i / 1000.0);
    r.add("prop-upper-exp2", fails == 0, "1000 points on (0, 0.43], " + std::to_string(fails) + " failures");

    std::size_t probe_fail = 0;
    double first_fail = 0.0;
    for (int i = 1; i <= 570; ++i) {
      const double x = 0.43 + 0.57 * i / 570.0;
      if (!probe_prop_upper_exp2(x)) {
        if (probe_fail++ == 0) first_fail = x;
      }
    }
    r.note("prop-upper-exp2-probe", "(0.43, 1]: " + std::to_string(probe_fail) + " of 570 points fail" +
                                        (probe_fail ? ", first at x=" + detail::str(first_fail) : ""));

    const double e = eta();
    r.add("eta-range", e > 0.07157 && e < 0.072, "eta = " + detail::str(e));
    r.add("eta-reference", std::fabs(e - 0.071576945878010984662) < 1e-12, "12-digit reference");

    std::size_t lp_points = 0;
    std::size_t lp_mismatch = 0;
    std::size_t lp_below = 0;
    std::size_t lp_original_below = 0;
    for (int i = 1; i <= 99; ++i) {
      const double p = i / 100.0;
      const double delta = p * p / 4.0;
      for (double eps : {0.0, 1e-6, 0.01}) {
        for (double o : {0.0, 0.5, 1.0, 10.0, 1000.0}) {
          ++lp_points;
          const double closed = lp_min_value(p, delta, eps, o);
          const double exact = lp_relaxed_exact(p, delta, eps, o);
          lp_mismatch += std::fabs(closed - exact) > 1e-9 * std::max(1.0, std::fabs(exact));
          lp_below += closed < p * p / 2.0 * o - 1e-12;
          lp_original_below += lp_original_exact(p, delta, eps, o) < closed - 1e-9 * std::max(1.0, closed);
        }
      }
    }
    r.add("lp-closed-form", lp_mismatch == 0,
          std::to_string(lp_points) + " points, " + std::to_string(lp_mismatch) + " mismatches vs exact solve");
    r.add("lp-floor", lp_below == 0, "lp_min_value >= p^2/2 opt, " + std::to_string(lp_below) + " violations");
    r.add("lp-original", lp_original_below == 0, "original two-constraint program >= closed form");
    r.add("lp-example", std::fabs(lp_min_value(0.5, 1.0 / 16.0, 0.0, 1.0) - 11.0 / 64.0) < 1e-15, "p=1/2 gives 11/64");

    static const double cap_p[] = {0.0, 0.7, 0.5, 0.3, 0.25, 0.2};
    std::size_t configs = 0;
    std::size_t structure_fail = 0;
    std::size_t structural_bound_fail = 0;
    std::size_t clean_bound_below = 0;
    for (int b = 2; b <= 5; ++b) {
      const double p = cap_p[b];
      for (int k = 1; k <= 4; ++k) {
        for (int dU = k; dU <= k * b; dU += b - 1) {
          for (int dV = 0; dV <= k * b; dV += b) {
            ++configs;
            structure_fail += !check_two_values(k, b, dU, dV, p);
            const double exact = mp_bruteforce_min_split(k, b, dU, dV, p).value;
            structural_bound_fail += exact + 1e-12 < mp_structural_bound(k, b, dU, dV, p);
            clean_bound_below += exact + 1e-12 < mp_lower_bound(dU + dV, k, p);
          }
        }
      }
    }
    r.add("mp-two-values", structure_fail == 0,
          std::to_string(configs) + " configurations, " + std::to_string(structure_fail) + " failures");
    r.add("mp-structural-bound", structural_bound_fail == 0,
          "exact min >= saturated-pair bound, " + std::to_string(structural_bound_fail) + " failures");
    r.note("mp-clean-bound", std::to_string(clean_bound_below) + " of " + std::to_string(configs) +
                                 " configurations fall below (p|C| - |M+|) eta with the O(p0) term at 0");

    // Unconstrained sums: the minimum never exceeds the value at any profile.
    std::size_t mp_consistency = 0;
    for (int total = 0; total <= 12; ++total) {
      auto m = mp_bruteforce_min(2, 3, total, 0.3);
      mp_consistency += std::fabs(mp_objective(m.argmin, 0.3) - m.value) > 1e-15;
    }
    r.add("mp-bruteforce", mp_consistency == 0, "argmin objective equals reported minimum");
  });
}

/// Proper (Delta + 1)-colorings and matching decompositions.
inline SuiteReport verify_vizing(const VerifyOptions& opt = {}) {
  return detail::timed("vizing", [&](SuiteReport& r) {
    const std::size_t count = opt.quick ? 30 : 100;
    std::size_t bad = 0;
    std::size_t max_n = 0;
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint64_t s = detail::mix_seed(opt.seed + 4, i);
      const std::size_t n = 3 + (i * 297) / (count - 1);
      const double q = std::min(1.0, (1.0 + static_cast<double>(s % 30)) / static_cast<double>(n));
      auto g = erdos_renyi(n, q, s);
      auto c = vizing_color(g);
      bad += !is_proper_coloring(g, c) || c.palette_size > max_degree(g) + 1;
      auto classes = decompose_into_matchings(EdgeSet::all(g));
      std::size_t total = 0;
      for (const auto& m : classes) total += m.size();
      bad += total != g.edge_count() || classes.size() > max_degree(g) + 1;
      max_n = std::max(max_n, n);
    }
    for (std::size_t n : {5, 8, 21, 40}) {
      auto k = complete_graph(n);
      auto c = vizing_color(k);
      bad += !is_proper_coloring(k, c) || c.palette_size > n;
    }
    r.add("vizing", bad == 0, std::to_string(count) + " random graphs up to n=" + std::to_string(max_n) + " plus cliques, " +
                                  std::to_string(bad) + " failures");
  });
}

/// Residual bound exactly; realized cover keeps (1 - eps)|M_R| on average.
inline SuiteReport verify_cover(const VerifyOptions& opt = {}) {
  return detail::timed("cover", [&](SuiteReport& r) {
    const std::size_t count = opt.quick ? 30 : 100;
    std::size_t bad = 0;
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint64_t s = detail::mix_seed(opt.seed + 5, i);
      const std::size_t n = 10 + s % 70;
      auto g = erdos_renyi(n, (2.0 + static_cast<double>(s % 13)) / static_cast<double>(n), s);
      auto cover = matching_cover_rounds(g, 1 + i % 8);
      bad += !residual_bound_check(g, cover);
    }
    r.add("residual-bound", bad == 0, std::to_string(count) + " instances, " + std::to_string(bad) + " violations");

    struct Case {
      double eps, p;
      std::size_t n;
      double q;
    };
    const std::vector<Case> cases = {{0.5, 0.5, 60, 0.4}, {0.5, 0.5, 120, 0.2}, {0.3, 0.8, 80, 0.3},
                                     {0.5, 0.3, 80, 0.5}, {0.4, 0.6, 100, 0.25}, {0.5, 0.5, 40, 0.9}};
    const std::size_t trials = opt.quick ? 200 : 1000;
    std::size_t index = 0;
    for (const auto& c : cases) {
      auto g = erdos_renyi(c.n, c.q, detail::mix_seed(opt.seed + 6, index));
      auto cover = matching_cover(g, c.eps, c.p);
      const double last = cover.matchings.empty() ? 0.0 : static_cast<double>(cover.matchings.back().size());
      auto est = estimate_expected_matching(cover.union_set, c.p, trials, detail::mix_seed(opt.seed + 7, index),
                                            opt.threads);
      const double floor = (1.0 - c.eps) * last;
      r.add("realized-cover:" + std::to_string(index), est.mean >= floor - 3.0 * est.std_error,
            "n=" + std::to_string(c.n) + " eps=" + detail::str(c.eps) + " p=" + detail::str(c.p) +
                " R=" + std::to_string(cover.rounds) + " |M_R|=" + detail::str(last) + " mean=" +
                detail::str(est.mean) + " se=" + detail::str(est.std_error));
      ++index;
    }
  });
}

/// The bipartite construction: nearly perfect realized matchings, small b-matchings.
inline SuiteReport verify_hard_instance(const VerifyOptions& opt = {}) {
  return detail::timed("hard-instance", [&](SuiteReport& r) {
    HardInstanceSpec spec;
    spec.N = opt.quick ? 200 : 1000;
    spec.p = 0.5;
    spec.seed = opt.seed;
    auto h = hard_instance(spec);
    const auto& lay = h.layout;
    const double n = static_cast<double>(lay.side());
    const std::size_t k = lay.k;
    bool sizes = h.graph.vertex_count() == 2 * lay.side() && lay.dense_edges == 2 * spec.N * k &&
                 h.graph.edge_count() == lay.dense_edges + lay.sparse_edges;
    r.add("layout", sizes,
          "N=" + std::to_string(spec.N) + " k=" + std::to_string(k) + " n=" + std::to_string(lay.side()) +
              " dense=" + std::to_string(lay.dense_edges) + " sparse=" + std::to_string(lay.sparse_edges));

    const std::size_t trials = opt.quick ? 200 : 1000;
    auto est = estimate_expected_matching(h.graph, spec.p, trials, opt.seed, opt.threads);
    r.add("realized-matching", est.mean >= 0.9 * n,
          "E[mu(G_p)] ~ " + detail::str(est.mean) + " (se " + detail::str(est.std_error) + "), 0.9 n = " +
              detail::str(0.9 * n) + ", ratio to n " + detail::str(est.mean / n));

    const auto b = static_cast<std::size_t>(std::ceil(2.0 / spec.p - 1e-12));
    const std::size_t bound = hard_instance_b_matching_bound(h, b);
    r.add("b-matching-bound", static_cast<double>(bound) < 0.99 * static_cast<double>(b) * n,
          "b=" + std::to_string(b) + " bound " + std::to_string(bound) + " vs 0.99 b n = " +
              detail::str(0.99 * static_cast<double>(b) * n));
    r.data = to_json(spec, lay);
  });
}

/// Sparsifier ratio floor and degree bound on the benchmark instances.
inline SuiteReport verify_ratio(const VerifyOptions& opt = {}, std::vector<ExperimentRow>* rows = nullptr) {
  return detail::timed("ratio", [&](SuiteReport& r) {
    const std::size_t size = opt.quick ? 60 : 200;
    const std::size_t hard_n = opt.quick ? 100 : 500;
    const std::size_t trials = opt.quick ? 200 : 2000;
    for (double p : {0.05, 0.3, 0.7}) {
      struct Named {
        std::string name;
        Graph g;
      };
      HardInstanceSpec spec;
      spec.N = hard_n;
      spec.p = p;
      spec.seed = opt.seed;
      std::vector<Named> instances;
      instances.push_back({"K" + std::to_string(size), complete_graph(size)});
      instances.push_back({"ER" + std::to_string(size), erdos_renyi(size, 0.2, opt.seed)});
      instances.push_back({"hard" + std::to_string(hard_n), hard_instance(spec).graph});
      for (const auto& inst : instances) {
        SparsifierConfig cfg;
        cfg.p = p;
        for (std::optional<std::size_t> rounds : {std::optional<std::size_t>{}, std::optional<std::size_t>{1},
                                                  std::optional<std::size_t>{3}}) {
          cfg.rounds_override = rounds;
          const std::string label = inst.name + ":p=" + detail::str(p) +
                                    (rounds ? ":R=" + std::to_string(*rounds) : std::string{});
          auto row = run_experiment(label, inst.g, cfg, rounds ? trials / 4 : trials, opt.seed, std::nullopt, opt.threads);
          r.add("degree:" + label, row.degree_ok(),
                "max degree " + std::to_string(row.max_degree) + " <= " + std::to_string(row.degree_bound));
          const std::string desc = std::string(branch_name(row.branch)) + " R=" + std::to_string(row.rounds) +
                                   " |H|=" + std::to_string(row.h_size) + "/" + std::to_string(row.m) + " ratio " +
                                   (row.ratio ? detail::str(*row.ratio) : "NA") + " (se " +
                                   detail::str(row.ratio_stderr) + ")";
          if (rounds) {
            r.note("ratio-reduced:" + label, desc + (row.pass() ? "" : " below floor"));
          } else {
            r.add("ratio:" + label, row.pass(), desc);
          }
          if (rows) rows->push_back(row);
        }
      }
    }

    // Degree bound across both branches on random graphs.
    std::size_t runs = 0;
    std::size_t bad = 0;
    const std::size_t sweep = opt.quick ? 10 : 40;
    for (std::size_t i = 0; i < sweep; ++i) {
      const std::uint64_t s = detail::mix_seed(opt.seed + 8, i);
      auto g = erdos_renyi(20 + s % 80, 0.05 + 0.3 * static_cast<double>(i % 7) / 7.0, s);
      for (double p : {0.05, 0.2, 0.6}) {
        SparsifierConfig cfg;
        cfg.p = p;
        for (std::optional<std::size_t> rounds : {std::optional<std::size_t>{}, std::optional<std::size_t>{2}}) {
          cfg.rounds_override = rounds;
          auto a = sparsify_small_p(g, cfg);
          auto b = sparsify_large_p(g, cfg);
          bad += max_degree(a.h) > degree_cap(p) + a.stats.rounds;
          bad += max_degree(b.h) > 1 + b.stats.rounds;
          runs += 2;
        }
      }
    }
    r.add("degree:sweep", bad == 0, std::to_string(runs) + " sparsifier runs, " + std::to_string(bad) + " violations");
  });
}

/// Sequential process over a decomposed b-matching with b N edges.
inline SuiteReport verify_outside_edges(const VerifyOptions& opt = {}) {
  return detail::timed("outside-edges", [&](SuiteReport& r) {
    const std::size_t trials = opt.quick ? 300 : 2000;
    for (std::size_t N : {30, 100}) {
      for (double p : {0.1, 0.2}) {
        const std::size_t b = degree_cap(p);
        std::vector<std::pair<std::string, Graph>> builds;
        {
          std::vector<std::pair<Vertex, Vertex>> e;
          const std::size_t copies = N / b;
          for (std::size_t c = 0; c < copies; ++c) {
            const auto base = static_cast<Vertex>(2 * b * c);
            for (Vertex i = 0; i < b; ++i) {
              for (Vertex j = 0; j < b; ++j) e.emplace_back(base + i, static_cast<Vertex>(base + b + j));
            }
          }
          builds.emplace_back("bicliques", build_graph(2 * b * copies, e));
        }
        {
          std::vector<std::pair<Vertex, Vertex>> e;
          for (std::size_t c = 0; c < N; ++c) {
            const auto center = static_cast<Vertex>((b + 1) * c);
            for (Vertex j = 1; j <= b; ++j) e.emplace_back(center, static_cast<Vertex>(center + j));
          }
          builds.emplace_back("stars", build_graph((b + 1) * N, e));
        }
        {
          auto dense = erdos_renyi(2 * N, 0.5, detail::mix_seed(opt.seed + 9, N * 10 + b));
          auto bm = maximum_b_matching(dense, b);
          if (bm.size >= b * N) {
            std::vector<EdgeId> ids(bm.bmatching.edges().begin(), bm.bmatching.edges().end());
            ids.resize(b * N);
            builds.emplace_back("dense-bmatching", edge_subgraph(EdgeSet(dense, ids)).graph);
          } else {
            r.note("outside:dense-bmatching:N=" + std::to_string(N) + ":p=" + detail::str(p),
                   "skipped, only " + std::to_string(bm.size) + " edges");
          }
        }
        for (const auto& [name, B] : builds) {
          const std::string label = "outside:" + name + ":N=" + std::to_string(N) + ":p=" + detail::str(p);
          if (B.edge_count() != b * N || max_degree(B) > b) {
            r.add(label, false, "construction has " + std::to_string(B.edge_count()) + " edges");
            continue;
          }
          auto matchings = decompose_into_matchings(EdgeSet::all(B));
          std::vector<double> x(trials);
          for (std::size_t t = 0; t < trials; ++t) {
            auto realized = realize(EdgeSet::all(B), p, RealizationStream(opt.seed, t, 2));
            x[t] = static_cast<double>(sequential_matching_process(matchings, realized).size());
          }
          auto est = summarize(x, opt.seed);
          const double floor = (1.0 - 3.0 * p) * static_cast<double>(N) / 3.0;
          r.add(label, est.mean >= floor - 3.0 * est.std_error,
                std::to_string(matchings.size()) + " matchings, mean " + detail::str(est.mean) + " (se " +
                    detail::str(est.std_error) + ") vs " + detail::str(floor));
        }
      }
    }
  });
}

/// Monte-Carlo against the exact expectation on small instances.
inline SuiteReport verify_calibration(const VerifyOptions& opt = {}) {
  return detail::timed("calibration", [&](SuiteReport& r) {
    auto tri = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    auto c4 = cycle_graph(4);
    r.add("fixture:triangle", std::fabs(exact_expected_matching(tri, 0.5) - 0.875) < 1e-12, "exact 0.875");
    r.add("fixture:C4", std::fabs(exact_expected_matching(c4, 0.5) - 1.375) < 1e-12, "exact 1.375");

    const std::size_t trials = opt.quick ? 500 : 4000;
    const std::size_t count = opt.quick ? 20 : 60;
    std::vector<std::pair<Graph, double>> cases = {{tri, 0.5}, {c4, 0.5}};
    for (std::size_t i = 0; i < count; ++i) {
      static const double ps[] = {0.1, 0.3, 0.5, 0.7, 0.9};
      cases.emplace_back(detail::small_random_graph(4, 10, 20, detail::mix_seed(opt.seed + 10, i)), ps[i % 5]);
    }
    std::size_t bad = 0;
    std::size_t done = 0;
    std::size_t degenerate = 0;
    double worst = 0.0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
      const auto& [g, p] = cases[i];
      if (g.edge_count() == 0) continue;
      const double exact = exact_expected_matching(g, p);
      auto est = estimate_expected_matching(g, p, trials, detail::mix_seed(opt.seed + 11, i), opt.threads);
      // A constant sample has no usable stderr.
      if (est.std_error == 0.0) {
        ++degenerate;
        continue;
      }
      const double dev = std::fabs(est.mean - exact);
      if (dev > 4.0 * est.std_error) ++bad;
      worst = std::max(worst, dev / est.std_error);
      ++done;
    }
    r.add("monte-carlo", bad == 0 && done >= (opt.quick ? 10 : 50),
          std::to_string(done) + " instances, " + std::to_string(bad) + " outside 4 se, worst " + detail::str(worst) +
              " se");
    r.note("monte-carlo-degenerate", std::to_string(degenerate) + " instances skipped with a constant sample");
  });
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"oracles", "bmatching-lemma", "bounds", "vizing", "cover",
                                                 "hard-instance", "ratio", "outside-edges", "calibration"};
  return names;
}

/// Runs one suite by name, or every suite for "all".
inline std::vector<SuiteReport> run_suite(const std::string& name, const VerifyOptions& opt = {}) {
  if (name == "all") {
    std::vector<SuiteReport> out;
    for (const auto& n : suite_names()) {
      auto one = run_suite(n, opt);
      out.insert(out.end(), one.begin(), one.end());
    }
    return out;
  }
  if (name == "oracles") return {verify_oracles(opt)};
  if (name == "bmatching-lemma") return {verify_bmatching_lemma(opt)};
  if (name == "bounds") return {verify_bounds(opt)};
  if (name == "vizing") return {verify_vizing(opt)};
  if (name == "cover") return {verify_cover(opt)};
  if (name == "hard-instance") return {verify_hard_instance(opt)};
  if (name == "ratio") return {verify_ratio(opt)};
  if (name == "outside-edges") return {verify_outside_edges(opt)};
  if (name == "calibration") return {verify_calibration(opt)};
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace stochmatch
