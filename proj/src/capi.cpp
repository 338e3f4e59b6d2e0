#include "dfs_stream.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

#include "dfs_stream/algorithms.hpp"
#include "dfs_stream/dfs_tree.hpp"
#include "dfs_stream/edge_stream.hpp"
#include "dfs_stream/graph_input.hpp"
#include "dfs_stream/types.hpp"

struct dfss_graph {
  dfs_stream::GraphInput g;
};

struct dfss_result {
  dfs_stream::RunResult r;
};

namespace {

thread_local std::string t_last_error;
thread_local int t_last_code = DFSS_OK;

void clear_error() {
  t_last_error.clear();
  t_last_code = DFSS_OK;
}

void fail(int code, const char* what) {
  t_last_code = code;
  t_last_error = what == nullptr ? "" : what;
}

// Runs fn, translating exceptions into the thread-local error state.
// Returns false when fn threw.
template <typename Fn>
bool guarded(Fn&& fn) {
  clear_error();
  try {
    fn();
    return true;
  } catch (const dfs_stream::InvalidArgument& e) {
    fail(DFSS_ERR_ARGUMENT, e.what());
  } catch (const dfs_stream::ParseError& e) {
    fail(DFSS_ERR_PARSE, e.what());
  } catch (const dfs_stream::IoError& e) {
    fail(DFSS_ERR_IO, e.what());
  } catch (const dfs_stream::TreeError& e) {
    fail(DFSS_ERR_PARSE, e.what());
  } catch (const dfs_stream::BudgetError& e) {
    fail(DFSS_ERR_BUDGET, e.what());
  } catch (const std::exception& e) {
    fail(DFSS_ERR_INTERNAL, e.what());
  }
  return false;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* dfss_last_error(void) { return t_last_error.c_str(); }

dfss_graph* dfss_graph_from_text(const char* text, const char* name) {
  if (text == nullptr) {
    fail(DFSS_ERR_ARGUMENT, "text is NULL");
    return nullptr;
  }
  dfss_graph* out = nullptr;
  guarded([&] {
    out = new dfss_graph{dfs_stream::ingest_edge_list(
        text, name == nullptr ? "graph" : name)};
  });
  return out;
}

dfss_graph* dfss_graph_from_file(const char* path) {
  if (path == nullptr) {
    fail(DFSS_ERR_ARGUMENT, "path is NULL");
    return nullptr;
  }
  dfss_graph* out = nullptr;
  guarded([&] { out = new dfss_graph{dfs_stream::load_edge_list_file(path)}; });
  return out;
}

dfss_graph* dfss_graph_random(uint32_t n, uint64_t m, uint64_t seed) {
  dfss_graph* out = nullptr;
  guarded([&] { out = new dfss_graph{dfs_stream::random_graph(n, m, seed)}; });
  return out;
}

void dfss_graph_free(dfss_graph* g) { delete g; }

uint32_t dfss_graph_vertices(const dfss_graph* g) {
  return g == nullptr ? 0 : g->g.n_original;
}

uint64_t dfss_graph_edges(const dfss_graph* g) {
  return g == nullptr ? 0 : g->g.m_original();
}

const char* dfss_graph_name(const dfss_graph* g) {
  return g == nullptr ? "" : g->g.name.c_str();
}

void dfss_config_init(dfss_config* cfg) {
  if (cfg == nullptr) return;
  cfg->algo = "simp";
  cfg->k = 1;
  cfg->space_mult = 1.0;
  cfg->enforce_budget = 1;
}

uint64_t dfss_default_budget(const char* algo, uint32_t n, uint32_t k) {
  if (algo == nullptr) return 0;
  auto parsed = dfs_stream::algorithm_from_name(algo);
  if (!parsed.has_value()) return 0;
  if (n == UINT32_MAX) return 0;
  uint64_t out = 0;
  guarded([&] { out = dfs_stream::default_edge_budget(*parsed, n + 1, k); });
  return out;
}

dfss_result* dfss_run(const dfss_graph* g, const dfss_config* cfg) {
  if (g == nullptr || cfg == nullptr || cfg->algo == nullptr) {
    fail(DFSS_ERR_ARGUMENT, "graph or config is NULL");
    return nullptr;
  }
  auto algo = dfs_stream::algorithm_from_name(cfg->algo);
  if (!algo.has_value()) {
    fail(DFSS_ERR_ARGUMENT,
         ("unknown algorithm: " + std::string(cfg->algo)).c_str());
    return nullptr;
  }
  dfs_stream::AlgoConfig ac;
  ac.algo = *algo;
  ac.k = cfg->k;
  ac.space_mult = cfg->space_mult;
  ac.enforce_budget = cfg->enforce_budget != 0;
  dfss_result* out = nullptr;
  guarded([&] {
    dfs_stream::EdgeStream stream(g->g);
    out = new dfss_result{dfs_stream::run_algorithm(stream, ac)};
  });
  return out;
}

void dfss_result_free(dfss_result* r) { delete r; }

uint64_t dfss_result_passes(const dfss_result* r) {
  return r == nullptr ? 0 : r->r.stats.passes;
}

uint64_t dfss_result_edges_scanned(const dfss_result* r) {
  return r == nullptr ? 0 : r->r.stats.edges_scanned;
}

uint64_t dfss_result_peak_edges(const dfss_result* r) {
  return r == nullptr ? 0 : r->r.stats.peak_stored_edges;
}

uint32_t dfss_result_height(const dfss_result* r) {
  return r == nullptr ? 0 : r->r.stats.tree_height;
}

double dfss_result_wall_seconds(const dfss_result* r) {
  return r == nullptr ? 0.0 : r->r.stats.wall_seconds;
}

char* dfss_result_tree(const dfss_result* r) {
  if (r == nullptr) {
    fail(DFSS_ERR_ARGUMENT, "result is NULL");
    return nullptr;
  }
  char* out = nullptr;
  guarded([&] { out = copy_string(r->r.tree.serialize()); });
  return out;
}

void dfss_string_free(char* s) { std::free(s); }

namespace {

int report_validation(const dfs_stream::DfsValidation& v, uint32_t* viol_u,
                      uint32_t* viol_v) {
  if (!v.valid && v.first_violation.has_value()) {
    if (viol_u != nullptr) *viol_u = v.first_violation->u;
    if (viol_v != nullptr) *viol_v = v.first_violation->v;
  }
  return v.valid ? 1 : 0;
}

}  // namespace

int dfss_result_validate(const dfss_result* r, const dfss_graph* g,
                         uint32_t* viol_u, uint32_t* viol_v) {
  if (r == nullptr || g == nullptr) {
    fail(DFSS_ERR_ARGUMENT, "result or graph is NULL");
    return DFSS_ERR_ARGUMENT;
  }
  int out = DFSS_ERR_INTERNAL;
  bool ok = guarded([&] {
    out = report_validation(dfs_stream::validate_dfs(g->g, r->r.tree), viol_u,
                            viol_v);
  });
  return ok ? out : t_last_code;
}

int dfss_validate_tree(const dfss_graph* g, const char* tree_text,
                       uint32_t* viol_u, uint32_t* viol_v) {
  if (g == nullptr || tree_text == nullptr) {
    fail(DFSS_ERR_ARGUMENT, "graph or tree text is NULL");
    return DFSS_ERR_ARGUMENT;
  }
  int out = DFSS_ERR_INTERNAL;
  bool ok = guarded([&] {
    dfs_stream::DfsTree t = dfs_stream::DfsTree::parse(tree_text);
    out = report_validation(dfs_stream::validate_dfs(g->g, t), viol_u, viol_v);
  });
  return ok ? out : t_last_code;
}

}  // extern "C"
