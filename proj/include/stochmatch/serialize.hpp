#pragma once

// JSON views of estimates, sparsifier stats and hard-instance metadata.
// Needs nlohmann/json on the include path.

#include <nlohmann/json.hpp>

#include "stochmatch/estimate.hpp"
#include "stochmatch/instances.hpp"
#include "stochmatch/sparsify.hpp"

namespace stochmatch {

inline nlohmann::json to_json(const Estimate& e) {
  return {{"mean", e.mean},
          {"stderr", e.std_error},
          {"trials", e.trials},
          {"ci95", {e.ci95.first, e.ci95.second}},
          {"seed", e.seed}};
}

inline nlohmann::json to_json(const RatioEstimate& r) {
  return {{"alg", to_json(r.alg)}, {"opt", to_json(r.opt)}, {"ratio", r.ratio}, {"ratio_stderr", r.ratio_stderr}};
}

inline nlohmann::json to_json(const SparsifierOutput& out) {
  const auto& s = out.stats;
  return {{"branch", branch_name(out.branch)},
          {"rounds", s.rounds},
          {"base_size", s.base_size},
          {"cover_sizes", s.cover_sizes},
          {"max_degree", s.max_degree},
          {"degree_bound", s.degree_bound},
          {"degree_histogram", s.degree_histogram},
          {"h_size", out.h.size()},
          {"n", s.n},
          {"m", s.m}};
}

inline nlohmann::json to_json(const HardInstanceSpec& spec, const HardInstanceLayout& lay) {
  auto range = [](std::pair<Vertex, Vertex> r) { return nlohmann::json::array({r.first, r.second}); };
  return {{"N", spec.N},
          {"p", spec.p},
          {"cstar", spec.cstar},
          {"seed", spec.seed},
          {"k", lay.k},
          {"side", lay.side()},
          {"L1", range(lay.L1)},
          {"L2", range(lay.L2)},
          {"R1", range(lay.R1)},
          {"R2", range(lay.R2)},
          {"dense_edges", lay.dense_edges},
          {"sparse_edges", lay.sparse_edges}};
}

}  // namespace stochmatch
