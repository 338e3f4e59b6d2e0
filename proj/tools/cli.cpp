// Command-line front end: single runs, experiment sweeps, and tree
// validation over the shared-library interface.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dfs_stream.h"
#include "harness.hpp"

namespace {

struct GraphDeleter {
  void operator()(dfss_graph* g) const { dfss_graph_free(g); }
};
struct ResultDeleter {
  void operator()(dfss_result* r) const { dfss_result_free(r); }
};
using GraphPtr = std::unique_ptr<dfss_graph, GraphDeleter>;
using ResultPtr = std::unique_ptr<dfss_result, ResultDeleter>;

struct RandomSpec {
  std::uint32_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t seed = 0;
};

bool parse_random(const std::string& text, RandomSpec& out, std::string& err) {
  unsigned long long n = 0, m = 0, seed = 0;
  char extra = 0;
  int got = std::sscanf(text.c_str(), "%llu,%llu,%llu%c", &n, &m, &seed, &extra);
  if (got != 3 || n == 0 || n > 0xFFFFFFFFull) {
    err = "--random expects n,m,seed with n in 1..2^32-1";
    return false;
  }
  out.n = static_cast<std::uint32_t>(n);
  out.m = m;
  out.seed = seed;
  return true;
}

bool parse_fixed_nm(const std::string& text, RandomSpec& out, std::string& err) {
  unsigned long long n = 0, m = 0;
  char extra = 0;
  int got = std::sscanf(text.c_str(), "%llu,%llu%c", &n, &m, &extra);
  if (got != 2 || n == 0 || n > 0xFFFFFFFFull) {
    err = "--random expects n,m with n in 1..2^32-1";
    return false;
  }
  out.n = static_cast<std::uint32_t>(n);
  out.m = m;
  return true;
}

int fail_with_last_error(const std::string& what) {
  std::cerr << what << ": " << dfss_last_error() << '\n';
  return 2;
}

bool write_file(const std::string& path, const std::string& text,
                std::string& err) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    err = "cannot write " + path;
    return false;
  }
  out << text;
  return bool(out);
}

bool read_file(const std::string& path, std::string& text, std::string& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err = "cannot read " + path;
    return false;
  }
  std::ostringstream os;
  os << in.rdbuf();
  text = os.str();
  return true;
}

struct RunOptions {
  std::string algo = "simp";
  std::string input;
  std::string random;
  std::uint32_t k = 1;
  double space_mult = 1.0;
  bool no_enforce = false;
  bool validate = false;
  std::string tree_out;
  std::string out;
};

int cmd_run(const RunOptions& opt) {
  std::string err;
  GraphPtr graph;
  std::string dataset;
  std::string seed_field = "0";
  if (!opt.random.empty()) {
    RandomSpec rs;
    if (!parse_random(opt.random, rs, err)) {
      std::cerr << err << '\n';
      return 2;
    }
    graph.reset(dfss_graph_random(rs.n, rs.m, rs.seed));
    if (!graph) return fail_with_last_error("graph generation failed");
    dataset = harness::gnm_name(rs.n, rs.m);
    seed_field = std::to_string(rs.seed);
  } else {
    graph.reset(dfss_graph_from_file(opt.input.c_str()));
    if (!graph) return fail_with_last_error("cannot load graph");
    dataset = dfss_graph_name(graph.get());
  }

  dfss_config cfg;
  dfss_config_init(&cfg);
  cfg.algo = opt.algo.c_str();
  cfg.k = opt.k;
  cfg.space_mult = opt.space_mult;
  cfg.enforce_budget = opt.no_enforce ? 0 : 1;
  ResultPtr res(dfss_run(graph.get(), &cfg));
  if (!res) return fail_with_last_error("run failed");

  std::ostringstream csv;
  csv << harness::csv_header() << '\n'
      << harness::csv_row(dataset, opt.algo, opt.k,
                          dfss_result_passes(res.get()),
                          dfss_result_peak_edges(res.get()),
                          dfss_result_height(res.get()),
                          dfss_result_edges_scanned(res.get()), seed_field,
                          dfss_result_wall_seconds(res.get()))
      << '\n';
  if (opt.out.empty()) {
    std::cout << csv.str();
  } else if (!write_file(opt.out, csv.str(), err)) {
    std::cerr << err << '\n';
    return 2;
  }

  if (!opt.tree_out.empty()) {
    char* tree = dfss_result_tree(res.get());
    if (tree == nullptr) return fail_with_last_error("serialization failed");
    std::string text(tree);
    dfss_string_free(tree);
    if (!write_file(opt.tree_out, text, err)) {
      std::cerr << err << '\n';
      return 2;
    }
  }

  if (opt.validate) {
    uint32_t u = 0, v = 0;
    int rc = dfss_result_validate(res.get(), graph.get(), &u, &v);
    if (rc < 0) return fail_with_last_error("validation error");
    if (rc == 0) {
      std::cerr << "invalid tree: edge (" << u << ", " << v
                << ") joins vertices that are not ancestor related\n";
      return 3;
    }
    std::cerr << "tree valid\n";
  }
  return 0;
}

struct ExperimentOptions {
  std::string sweep;
  std::string random;  // fixed n,m for m/k sweeps; seed part ignored
  std::vector<std::string> algos;
  std::uint32_t k = 10;
  double space_mult = 1.0;
  bool no_enforce = false;
  std::uint32_t trials = 10;
  std::uint64_t seed = 1;
  unsigned jobs = 0;
  double log_base = 2.718281828459045;
  std::string out;
};

int cmd_experiment(const ExperimentOptions& opt) {
  harness::ExperimentSpec spec;
  spec.axis = opt.sweep.empty() ? 'n' : opt.sweep[0];
  spec.fixed_k = opt.k;
  spec.algorithms = opt.algos;
  spec.trials = opt.trials;
  spec.base_seed = opt.seed;
  spec.space_mult = opt.space_mult;
  spec.enforce_budget = !opt.no_enforce;
  spec.jobs = opt.jobs;
  spec.log_base = opt.log_base;
  if (!opt.random.empty()) {
    RandomSpec rs;
    std::string err;
    if (!parse_fixed_nm(opt.random, rs, err)) {
      std::cerr << err << '\n';
      return 2;
    }
    spec.fixed_n = rs.n;
    spec.fixed_m = rs.m;
  }

  std::string err;
  if (opt.out.empty()) {
    if (harness::run_experiment(spec, std::cout, &err) != 0) {
      std::cerr << "experiment failed: " << err << '\n';
      return 2;
    }
    return 0;
  }
  std::ofstream out(opt.out, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << opt.out << '\n';
    return 2;
  }
  if (harness::run_experiment(spec, out, &err) != 0) {
    std::cerr << "experiment failed: " << err << '\n';
    return 2;
  }
  return 0;
}

int cmd_validate(const std::string& graph_path, const std::string& tree_path) {
  GraphPtr graph(dfss_graph_from_file(graph_path.c_str()));
  if (!graph) return fail_with_last_error("cannot load graph");
  std::string tree_text, err;
  if (!read_file(tree_path, tree_text, err)) {
    std::cerr << err << '\n';
    return 2;
  }
  uint32_t u = 0, v = 0;
  int rc = dfss_validate_tree(graph.get(), tree_text.c_str(), &u, &v);
  if (rc < 0) return fail_with_last_error("validation error");
  if (rc == 0) {
    std::cerr << "invalid tree: edge (" << u << ", " << v
              << ") joins vertices that are not ancestor related\n";
    return 3;
  }
  std::cout << "tree valid\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Streaming DFS-tree construction"};
  app.require_subcommand(1);

  RunOptions run_opt;
  CLI::App* run = app.add_subcommand("run", "run one algorithm on one graph");
  run->add_option("--algo", run_opt.algo,
                  "simpo, simp, imprv, kpath, klevo, or klev (default simp)");
  auto* in_opt = run->add_option("--input", run_opt.input, "edge list file");
  auto* rnd_opt =
      run->add_option("--random", run_opt.random, "random graph n,m,seed");
  in_opt->excludes(rnd_opt);
  rnd_opt->excludes(in_opt);
  run->add_option("-k", run_opt.k, "trade-off parameter");
  run->add_option("--space-mult", run_opt.space_mult,
                  "scale the default edge budget");
  run->add_flag("--no-enforce", run_opt.no_enforce,
                "meter space without aborting on overrun");
  run->add_flag("--validate", run_opt.validate, "check the resulting tree");
  run->add_option("--tree-out", run_opt.tree_out, "write the tree here");
  run->add_option("--out", run_opt.out, "write the CSV here (default stdout)");

  ExperimentOptions exp_opt;
  CLI::App* exp = app.add_subcommand("experiment", "run a sweep, emit CSV");
  exp->add_option("--sweep", exp_opt.sweep, "axis: n, m, or k")
      ->required()
      ->check(CLI::IsMember({"n", "m", "k"}));
  exp->add_option("--random", exp_opt.random,
                  "fixed n,m for m/k sweeps (m=0 derives m = n log n)");
  exp->add_option("--algo", exp_opt.algos, "algorithms (repeatable)");
  exp->add_option("-k", exp_opt.k, "fixed k for n/m sweeps");
  exp->add_option("--space-mult", exp_opt.space_mult,
                  "scale the default edge budget");
  exp->add_flag("--no-enforce", exp_opt.no_enforce,
                "meter space without aborting on overrun");
  exp->add_option("--trials", exp_opt.trials, "trials per point");
  exp->add_option("--seed", exp_opt.seed, "base seed; trial i uses seed+i");
  exp->add_option("--jobs", exp_opt.jobs, "worker threads (0 = all cores)");
  exp->add_option("--log-base", exp_opt.log_base,
                  "base of the log in derived m = n log n");
  exp->add_option("--out", exp_opt.out, "write the CSV here (default stdout)");

  std::string v_graph, v_tree;
  CLI::App* val = app.add_subcommand("validate", "check a tree against a graph");
  val->add_option("graph", v_graph, "edge list file")->required();
  val->add_option("tree", v_tree, "tree file (vertex parent level)")
      ->required();

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    if (run_opt.input.empty() && run_opt.random.empty()) {
      std::cerr << "run needs --input or --random\n";
      return 2;
    }
    return cmd_run(run_opt);
  }
  if (exp->parsed()) return cmd_experiment(exp_opt);
  return cmd_validate(v_graph, v_tree);
}
