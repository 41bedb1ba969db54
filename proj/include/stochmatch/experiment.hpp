#pragma once

// One sparsify-then-estimate row, shared by the CLI and the ratio suite.

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stochmatch/serialize.hpp"
#include "stochmatch/simulate.hpp"
#include "stochmatch/sparsify.hpp"

namespace stochmatch {

inline constexpr const char* kExperimentCsvHeader =
    "instance,n,m,p,branch,rounds,max_degree,opt_mean,opt_stderr,alg_mean,alg_stderr,ratio,ratio_stderr,pass";

struct ExperimentRow {
  std::string instance;
  std::size_t n = 0;
  std::size_t m = 0;
  double p = 0.0;
  Branch branch = Branch::kLargeP;
  std::size_t rounds = 0;
  std::size_t max_degree = 0;
  std::size_t degree_bound = 0;
  std::size_t h_size = 0;
  Estimate opt;
  Estimate alg;
  std::optional<double> ratio;  // empty when opt is zero
  double ratio_stderr = 0.0;

  bool degree_ok() const { return max_degree <= degree_bound; }
  /// ratio >= 0.5 - 3 stderr; a row without a ratio passes vacuously.
  bool pass() const { return !ratio || *ratio >= 0.5 - 3.0 * ratio_stderr; }
};

inline ExperimentRow run_experiment(const std::string& name, const Graph& g, const SparsifierConfig& cfg,
                                    std::size_t trials, std::uint64_t seed, std::optional<Branch> forced = std::nullopt,
                                    unsigned threads = 1) {
  auto out = !forced ? sparsify_auto(g, cfg)
             : *forced == Branch::kSmallP ? sparsify_small_p(g, cfg)
                                          : sparsify_large_p(g, cfg);
  ExperimentRow row;
  row.instance = name;
  row.n = g.vertex_count();
  row.m = g.edge_count();
  row.p = cfg.p;
  row.branch = out.branch;
  row.rounds = out.stats.rounds;
  row.max_degree = out.stats.max_degree;
  row.degree_bound = out.stats.degree_bound;
  row.h_size = out.h.size();
  if (g.edge_count() == 0) {
    std::vector<double> zeros(trials, 0.0);
    row.opt = row.alg = summarize(zeros, seed);
    return row;
  }
  RatioEstimate r;
  try {
    r = estimate_ratio(g, out.h, cfg.p, trials, seed, Pairing::kPaired, threads);
  } catch (const std::domain_error&) {
    // No realized edge in any trial; alg <= opt = 0 in every paired trial.
    row.opt = row.alg = estimate_expected_matching(g, cfg.p, trials, seed, threads);
    return row;
  }
  row.opt = r.opt;
  row.alg = r.alg;
  row.ratio = r.ratio;
  row.ratio_stderr = r.ratio_stderr;
  return row;
}

namespace detail {

inline std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace detail

inline void write_csv_row(std::ostream& out, const ExperimentRow& r) {
  using detail::fmt;
  out << r.instance << ',' << r.n << ',' << r.m << ',' << fmt(r.p) << ',' << branch_name(r.branch) << ','
      << r.rounds << ',' << r.max_degree << ',' << fmt(r.opt.mean) << ',' << fmt(r.opt.std_error) << ','
      << fmt(r.alg.mean) << ',' << fmt(r.alg.std_error) << ',' << (r.ratio ? fmt(*r.ratio) : "NA") << ','
      << (r.ratio ? fmt(r.ratio_stderr) : "NA") << ',' << (r.pass() ? "PASS" : "FAIL") << '\n';
}

inline nlohmann::json to_json(const ExperimentRow& r) {
  nlohmann::json j{{"instance", r.instance},
                   {"n", r.n},
                   {"m", r.m},
                   {"p", r.p},
                   {"branch", branch_name(r.branch)},
                   {"rounds", r.rounds},
                   {"max_degree", r.max_degree},
                   {"h_size", r.h_size},
                   {"opt_mean", r.opt.mean},
                   {"opt_stderr", r.opt.std_error},
                   {"alg_mean", r.alg.mean},
                   {"alg_stderr", r.alg.std_error},
                   {"ratio", nullptr},
                   {"ratio_stderr", nullptr},
                   {"pass", r.pass()}};
  if (r.ratio) {
    j["ratio"] = *r.ratio;
    j["ratio_stderr"] = r.ratio_stderr;
  }
  return j;
}

}  // namespace stochmatch
