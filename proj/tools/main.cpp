// stochmatch command-line front end.
// Exit codes: 0 pass, 1 assertion failure, 2 usage or I/O error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "stochmatch/experiment.hpp"
#include "stochmatch/serialize.hpp"
#include "stochmatch/stochmatch.hpp"
#include "stochmatch/verify.hpp"

namespace sm = stochmatch;
namespace fs = std::filesystem;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<std::string> inputs;
  std::vector<double> ps{0.5};
  double p0 = 0.1;
  std::string algorithm = "auto";
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  double multiplier = 2.0;
  std::optional<std::size_t> rounds;
  unsigned threads = 1;
  std::string output;
  std::string format = "csv";

  void validate() const {
    for (double p : ps) {
      if (!(p > 0.0 && p < 1.0)) throw UsageError("--p must lie in (0, 1)");
    }
    if (trials < 1) throw UsageError("--trials must be at least 1");
    if (format != "csv" && format != "json") throw UsageError("--format must be csv or json");
  }

  sm::SparsifierConfig sparsifier(double p) const {
    sm::SparsifierConfig cfg;
    cfg.p = p;
    cfg.p0 = p0;
    cfg.multiplier = multiplier;
    cfg.seed = seed;
    cfg.rounds_override = rounds;
    return cfg;
  }

  std::optional<sm::Branch> forced() const {
    if (algorithm == "small-p") return sm::Branch::kSmallP;
    if (algorithm == "large-p") return sm::Branch::kLargeP;
    return std::nullopt;
  }
};

// Writes to `path`, or stdout when it is empty.
template <class Fn>
void emit(const std::string& path, Fn&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  write(out);
  if (!out) throw std::runtime_error("write failed for " + path);
}

void add_common(CLI::App* cmd, RunConfig& cfg, bool many_p) {
  if (many_p) {
    cmd->add_option("--p", cfg.ps, "Edge realization probabilities")->expected(1, -1);
  } else {
    cmd->add_option("--p", cfg.ps, "Edge realization probability")->expected(1);
  }
  cmd->add_option("--p0", cfg.p0, "Branch threshold: p <= p0 uses the small-p algorithm");
  cmd->add_option("--algorithm", cfg.algorithm, "small-p, large-p or auto")
      ->check(CLI::IsMember({"small-p", "large-p", "auto"}));
  cmd->add_option("--rounds-multiplier", cfg.multiplier, "Constant c in R = ceil(c ln(1/(eps p)) / (eps p))");
  cmd->add_option("--rounds", cfg.rounds, "Fix the number of matching-cover rounds");
}

sm::Graph read_input(const std::string& path) {
  if (path.empty() || path == "-") return sm::read_edge_list(std::cin);
  return sm::load_edge_list(path);
}

int cmd_gen_write(const sm::Graph& g, const std::string& output) {
  emit(output, [&](std::ostream& os) { sm::write_edge_list(os, g); });
  return 0;
}

int cmd_sparsify(const RunConfig& cfg, const std::string& stats_path) {
  auto g = read_input(cfg.inputs.empty() ? "" : cfg.inputs.front());
  auto scfg = cfg.sparsifier(cfg.ps.front());
  auto forced = cfg.forced();
  auto out = !forced ? sm::sparsify_auto(g, scfg)
             : *forced == sm::Branch::kSmallP ? sm::sparsify_small_p(g, scfg)
                                              : sm::sparsify_large_p(g, scfg);
  emit(cfg.output, [&](std::ostream& os) { sm::write_edge_list(os, out.h); });
  std::string stats = stats_path;
  if (stats.empty() && !cfg.output.empty() && cfg.output != "-") stats = cfg.output + ".stats.json";
  const auto j = sm::to_json(out);
  if (stats.empty()) {
    std::cerr << j.dump(2) << '\n';
  } else {
    emit(stats, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
  }
  if (out.stats.max_degree > out.stats.degree_bound) {
    std::cerr << "max degree " << out.stats.max_degree << " exceeds " << out.stats.degree_bound << '\n';
    return kExitFail;
  }
  return 0;
}

int cmd_estimate(const RunConfig& cfg) {
  auto g = read_input(cfg.inputs.empty() ? "" : cfg.inputs.front());
  std::vector<std::pair<double, sm::Estimate>> rows;
  for (double p : cfg.ps) rows.emplace_back(p, sm::estimate_expected_matching(g, p, cfg.trials, cfg.seed, cfg.threads));
  emit(cfg.output, [&](std::ostream& os) {
    if (cfg.format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& [p, e] : rows) {
        auto j = sm::to_json(e);
        j["p"] = p;
        j["n"] = g.vertex_count();
        j["m"] = g.edge_count();
        arr.push_back(j);
      }
      os << arr.dump(2) << '\n';
    } else {
      os << "n,m,p,mean,stderr,ci_lo,ci_hi,trials,seed\n";
      for (const auto& [p, e] : rows) {
        os << g.vertex_count() << ',' << g.edge_count() << ',' << sm::detail::fmt(p) << ',' << sm::detail::fmt(e.mean)
           << ',' << sm::detail::fmt(e.std_error) << ',' << sm::detail::fmt(e.ci95.first) << ','
           << sm::detail::fmt(e.ci95.second) << ',' << e.trials << ',' << e.seed << '\n';
      }
    }
  });
  return 0;
}

int cmd_experiment(const RunConfig& cfg) {
  if (cfg.inputs.empty()) throw UsageError("experiment needs at least one --input");
  std::vector<sm::ExperimentRow> rows;
  for (const auto& path : cfg.inputs) {
    auto g = read_input(path);
    const std::string name = fs::path(path).stem().string();
    for (double p : cfg.ps) {
      rows.push_back(sm::run_experiment(name, g, cfg.sparsifier(p), cfg.trials, cfg.seed, cfg.forced(), cfg.threads));
    }
  }
  emit(cfg.output, [&](std::ostream& os) {
    if (cfg.format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : rows) arr.push_back(sm::to_json(r));
      os << arr.dump(2) << '\n';
    } else {
      os << sm::kExperimentCsvHeader << '\n';
      for (const auto& r : rows) sm::write_csv_row(os, r);
    }
  });
  for (const auto& r : rows) {
    if (!r.degree_ok()) return kExitFail;
  }
  return 0;
}

int cmd_verify(const std::string& suite, const sm::VerifyOptions& opt, const std::string& output) {
  std::vector<sm::SuiteReport> reports;
  try {
    reports = sm::run_suite(suite, opt);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool ok = true;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    std::cout << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << sm::detail::str(r.seconds) << "s)\n";
    for (const auto& c : r.checks) {
      std::cout << "  [" << (c.informational ? "info" : c.passed ? "ok" : "FAIL") << "] " << c.name << ": " << c.detail
                << '\n';
    }
    ok = ok && r.passed();
    arr.push_back(sm::to_json(r));
  }
  if (!output.empty()) emit(output, [&](std::ostream& os) { os << arr.dump(2) << '\n'; });
  return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stochastic matching sparsifiers: generation, sparsification, estimation, verification"};
  app.require_subcommand(1);

  RunConfig cfg;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance as an edge list");
  gen->require_subcommand(1);
  std::string gen_out;
  std::size_t n = 0;
  std::size_t a = 0;
  std::size_t b = 0;
  double q = 0.0;
  std::uint64_t gen_seed = 1;
  sm::HardInstanceSpec hard_spec;
  auto* gen_er = gen->add_subcommand("er", "Erdos-Renyi G(n, q)");
  gen_er->add_option("--n", n)->required();
  gen_er->add_option("--q", q)->required();
  gen_er->add_option("--seed", gen_seed);
  auto* gen_complete = gen->add_subcommand("complete", "Complete graph K_n");
  gen_complete->add_option("--n", n)->required();
  auto* gen_bip = gen->add_subcommand("bipartite", "Complete bipartite K_{a,b}");
  gen_bip->add_option("--a", a)->required();
  gen_bip->add_option("--b", b)->required();
  auto* gen_hard = gen->add_subcommand("hard", "Dense blocks plus a sparse random block; writes <output>.meta.json");
  gen_hard->add_option("--N", hard_spec.N);
  gen_hard->add_option("--p", hard_spec.p);
  gen_hard->add_option("--cstar", hard_spec.cstar);
  gen_hard->add_option("--seed", hard_spec.seed);
  for (auto* sub : {gen_er, gen_complete, gen_bip, gen_hard}) sub->add_option("--output", gen_out, "Edge-list path");

  // sparsify
  auto* sparsify = app.add_subcommand("sparsify", "Compute the bounded-degree subgraph H");
  std::string stats_path;
  std::string single_input;
  sparsify->add_option("--input", single_input, "Edge-list path (stdin if omitted)");
  add_common(sparsify, cfg, false);
  sparsify->add_option("--output", cfg.output, "Edge list of H (stdout if omitted)");
  sparsify->add_option("--stats", stats_path, "Stats JSON (default <output>.stats.json)");

  // estimate
  auto* estimate = app.add_subcommand("estimate", "Monte-Carlo estimate of E[mu(G_p)]");
  estimate->add_option("--input", single_input, "Edge-list path (stdin if omitted)");
  estimate->add_option("--p", cfg.ps)->expected(1, -1);
  estimate->add_option("--trials", cfg.trials);
  estimate->add_option("--seed", cfg.seed);
  estimate->add_option("--threads", cfg.threads);
  estimate->add_option("--output", cfg.output);
  estimate->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Sparsify and estimate the ratio per (instance, p)");
  experiment->add_option("--input", cfg.inputs, "Edge-list paths")->expected(1, -1)->required();
  add_common(experiment, cfg, true);
  experiment->add_option("--trials", cfg.trials);
  experiment->add_option("--seed", cfg.seed);
  experiment->add_option("--threads", cfg.threads);
  experiment->add_option("--output", cfg.output);
  experiment->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  std::string suite;
  std::string verify_out;
  sm::VerifyOptions vopt;
  verify->add_option("suite", suite, "oracles, bmatching-lemma, bounds, vizing, cover, hard-instance, ratio, "
                                     "outside-edges, calibration or all")
      ->required();
  verify->add_option("--seed", vopt.seed);
  verify->add_option("--threads", vopt.threads);
  verify->add_flag("--quick", vopt.quick, "Smaller instances and trial counts");
  verify->add_option("--output", verify_out, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (!single_input.empty()) cfg.inputs = {single_input};
    if (*gen) {
      if (*gen_er) return cmd_gen_write(sm::erdos_renyi(n, q, gen_seed), gen_out);
      if (*gen_complete) return cmd_gen_write(sm::complete_graph(n), gen_out);
      if (*gen_bip) return cmd_gen_write(sm::complete_bipartite(a, b), gen_out);
      auto h = sm::hard_instance(hard_spec);
      cmd_gen_write(h.graph, gen_out);
      const std::string meta = gen_out.empty() || gen_out == "-" ? std::string{} : gen_out + ".meta.json";
      const auto j = sm::to_json(hard_spec, h.layout);
      if (meta.empty()) {
        std::cerr << j.dump(2) << '\n';
      } else {
        emit(meta, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
      }
      return 0;
    }
    if (*verify) return cmd_verify(suite, vopt, verify_out);
    cfg.validate();
    if (*sparsify) return cmd_sparsify(cfg, stats_path);
    if (*estimate) return cmd_estimate(cfg);
    if (*experiment) return cmd_experiment(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const sm::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "assertion failed: " << e.what() << '\n';
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
