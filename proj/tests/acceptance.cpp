// End-to-end acceptance checks. Each criterion prints exactly one PASS or
// FAIL line with its pinned thresholds; the process exits nonzero when any
// criterion fails. argv[1] names the bundled dataset directory.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dfs_stream/algorithms.hpp"
#include "dfs_stream/dsu.hpp"
#include "dfs_stream/graph_input.hpp"
#include "dfs_stream/restructure.hpp"
#include "dfs_stream/space_meter.hpp"
#include "oracles.hpp"

using namespace dfs_stream;

namespace {

int failures = 0;

void report(int num, bool ok, const std::string& what) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", num, what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

RunResult run(Algorithm a, const GraphInput& g, std::uint32_t k) {
  AlgoConfig cfg;
  cfg.algo = a;
  cfg.k = k;
  EdgeStream stream(g);
  return run_algorithm(stream, cfg);
}

// Shared corpus for criteria 1-3: 200 seeded instances spanning four vertex
// counts and four densities; the buffered algorithms run at four k values.
constexpr std::uint32_t kSweep[] = {1, 2, 5, 10};

struct Outcome {
  std::uint64_t passes = 0;
  std::uint64_t peak = 0;
  std::uint32_t height = 0;
  bool valid = false;
};

struct Instance {
  std::uint32_t n = 0;
  std::uint32_t n_aug = 0;
  std::map<std::pair<Algorithm, std::uint32_t>, Outcome> runs;
};

std::vector<Instance> corpus;
double corpus_seconds = 0.0;

void build_corpus() {
  auto t0 = std::chrono::steady_clock::now();
  struct Combo {
    std::uint32_t n;
    std::uint64_t m;
  };
  std::vector<Combo> combos;
  for (std::uint32_t n : {10u, 50u, 100u, 500u}) {
    std::uint64_t full = std::uint64_t{n} * (n - 1) / 2;
    double nd = n;
    for (double m : {nd / 2, nd, nd * std::log(nd), nd * std::sqrt(nd)})
      combos.push_back(
          {n, std::min<std::uint64_t>(
                  full, static_cast<std::uint64_t>(std::llround(m)))});
  }
  for (int i = 0; i < 200; ++i) {
    const Combo& c = combos[i % combos.size()];
    std::uint64_t seed = 1 + i / combos.size();
    GraphInput g = random_graph(c.n, c.m, seed);

    Instance inst;
    inst.n = c.n;
    inst.n_aug = g.n_augmented();
    auto record = [&](Algorithm a, std::uint32_t k) {
      RunResult r = run(a, g, k);
      Outcome o;
      o.passes = r.stats.passes;
      o.peak = r.stats.peak_stored_edges;
      o.height = r.stats.tree_height;
      o.valid = validate_dfs(g, r.tree).valid;
      if (o.valid && c.n <= 100) {
        auto parent = oracles::parents_of(r.tree);
        o.valid = !oracles::dfs_violation(g, parent).has_value();
      }
      inst.runs[{a, k}] = o;
    };
    record(Algorithm::simpo, 1);
    record(Algorithm::simp, 1);
    record(Algorithm::imprv, 1);
    for (std::uint32_t k : kSweep) {
      record(Algorithm::kpath, k);
      record(Algorithm::klevo, k);
      record(Algorithm::klev, k);
    }
    corpus.push_back(std::move(inst));
  }
  corpus_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
}

void criterion_1_validity() {
  std::uint64_t runs = 0, bad = 0;
  for (const Instance& inst : corpus)
    for (const auto& [key, o] : inst.runs) {
      ++runs;
      if (!o.valid) ++bad;
    }
  bool ok = bad == 0 && corpus.size() == 200 && corpus_seconds < 120.0;
  char buf[180];
  std::snprintf(buf, sizeof buf,
                "%zu seeded instances, %llu runs (6 algorithms, k swept over "
                "{1,2,5,10}), %llu invalid trees, %.1fs (< 120s)",
                corpus.size(), static_cast<unsigned long long>(runs),
                static_cast<unsigned long long>(bad), corpus_seconds);
  report(1, ok, buf);
}

void criterion_2_pass_laws() {
  std::uint64_t checked = 0, broken = 0;
  for (const Instance& inst : corpus) {
    std::uint32_t n = inst.n;
    auto law = [&](bool ok) {
      ++checked;
      if (!ok) ++broken;
    };
    law(inst.runs.at({Algorithm::simpo, 1}).passes == n);
    law(inst.runs.at({Algorithm::simp, 1}).passes <= n);
    const Outcome& imprv = inst.runs.at({Algorithm::imprv, 1});
    law(imprv.passes == imprv.height);
    for (std::uint32_t k : kSweep) {
      law(inst.runs.at({Algorithm::kpath, k}).passes <= 1 + (n + k - 1) / k);
      const Outcome& klevo = inst.runs.at({Algorithm::klevo, k});
      law(klevo.passes <= 1 + (klevo.height + k - 1) / k);
      law(inst.runs.at({Algorithm::klev, k}).passes <= klevo.passes);
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%llu pass-count laws over the corpus, %llu violated",
                static_cast<unsigned long long>(checked),
                static_cast<unsigned long long>(broken));
  report(2, broken == 0, buf);
}

void criterion_3_space_bounds() {
  std::uint64_t over = 0;
  double worst = 0.0;
  for (const Instance& inst : corpus)
    for (const auto& [key, o] : inst.runs) {
      std::uint64_t budget = default_edge_budget(key.first, inst.n_aug,
                                                 key.second);
      if (o.peak > budget) ++over;
      worst = std::max(worst, static_cast<double>(o.peak) / budget);
    }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "peak stored edges within n*k+n (kpath) and 4*n*k (klev) "
                "style budgets on every run (worst fill %.2f), %llu overruns",
                worst, static_cast<unsigned long long>(over));
  report(3, over == 0, buf);
}

void criterion_4_min_height_paths() {
  // On connected graphs every DFS tree is at least m/n deep, whoever built
  // it; and each path peeled from a full buffer spans at least k edges.
  const Algorithm algos[] = {Algorithm::simpo, Algorithm::simp,
                             Algorithm::imprv, Algorithm::kpath,
                             Algorithm::klevo, Algorithm::klev};
  std::uint32_t flat = 0, short_paths = 0, extractions_seen = 0, made = 0;
  std::uint32_t k = 3;
  for (std::uint64_t seed = 1; made < 50; ++seed) {
    std::uint32_t n = 60;
    GraphInput g = random_graph(n, 4 * n, seed);
    auto comp = oracles::bfs_components(n + 1, g.edges, false);
    bool connected = true;
    for (VertexId v = 1; v <= n; ++v) connected = connected && comp[v] == 1;
    if (!connected) continue;
    ++made;
    double lower = static_cast<double>(g.edges.size()) / n;

    auto offline = oracles::recursive_dfs_parents(g);
    if (oracles::tree_height(offline) < lower) ++flat;
    for (Algorithm a : algos) {
      RunResult r = run(a, g, k);
      if (r.stats.tree_height < lower) ++flat;
      if (a == Algorithm::kpath && r.debug.path_extractions > 0) {
        ++extractions_seen;
        if (r.debug.min_extracted_path < k + 1) ++short_paths;
      }
    }
  }
  char buf[220];
  std::snprintf(buf, sizeof buf,
                "50 connected graphs: every produced DFS tree at least m/n "
                "deep (%u too flat); %u runs peeled buffered paths, all "
                "spanning >= k edges (%u short)",
                flat, extractions_seen, short_paths);
  report(4, flat == 0 && short_paths == 0 && extractions_seen >= 40, buf);
}

void criterion_5_monotone_fall() {
  std::uint64_t calls = 0, level_drops = 0, bad_stored = 0, bad_window = 0;
  for (std::uint64_t seed = 1; calls < 1000; ++seed) {
    std::uint32_t n = 20 + static_cast<std::uint32_t>((seed * 13) % 81);
    std::uint32_t k =
        seed % 2 == 0 ? 0xFFFFFFFFu : 2 + static_cast<std::uint32_t>(seed % 7);
    DfsTree t(n, 0);
    std::vector<VertexId> parent(n, kNoVertex);
    std::uint64_t s = oracles::mix64(seed);
    for (VertexId v = 1; v < n; ++v) {
      VertexId p = static_cast<VertexId>(splitmix64_next(s) % v);
      parent[v] = p;
      t.attach(v, p);
    }
    SpaceMeter meter(1 << 20, true);
    SubgraphH h(n, meter);
    for (VertexId v = 1; v < n; ++v) h.add_edge(v, parent[v]);

    GraphInput g = random_graph(n - 1, 2 * n, seed * 1009 + 7);
    for (const Edge& e : g.edges) {
      if (t.ancestor_related(e.u, e.v) || h.has_edge(e.u, e.v)) continue;
      std::vector<std::uint32_t> before(n);
      for (VertexId v = 0; v < n; ++v) before[v] = t.level(v);
      maintain_dfs(t, h, e, k, nullptr, nullptr);
      ++calls;
      for (VertexId v = 0; v < n; ++v)
        if (t.level(v) < before[v]) ++level_drops;
      // after every call the stored subgraph must again be tree plus back
      // edges, each kept edge touching the top slice
      for (VertexId a = 0; a < n; ++a)
        for (VertexId b : h.neighbors(a)) {
          if (a > b) continue;
          if (t.parent(a) == b || t.parent(b) == a) continue;
          if (!t.ancestor_related(a, b)) ++bad_stored;
          if (k != 0xFFFFFFFFu && std::min(t.level(a), t.level(b)) >= k)
            ++bad_window;
        }
    }
  }
  // the same discipline inside full runs, on top of their internal checks
  std::uint32_t invalid_runs = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    GraphInput g = random_graph(200, 600, seed);
    RunResult r = run(Algorithm::klev, g, 4);
    if (!validate_dfs(g, r.tree).valid) ++invalid_runs;
  }
  bool ok = calls >= 1000 && level_drops == 0 && bad_stored == 0 &&
            bad_window == 0 && invalid_runs == 0;
  char buf[220];
  std::snprintf(buf, sizeof buf,
                "%llu randomized restructuring calls (n up to 100): no level "
                "ever fell (%llu drops), storage invariant held (%llu stray, "
                "%llu outside the slice); 5 full runs stayed valid (%u bad)",
                static_cast<unsigned long long>(calls),
                static_cast<unsigned long long>(level_drops),
                static_cast<unsigned long long>(bad_stored),
                static_cast<unsigned long long>(bad_window), invalid_runs);
  report(5, ok, buf);
}

void criterion_6_bookkeeping_oracles() {
  // union-find vs BFS partition
  std::uint64_t partition_mismatches = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    std::uint32_t n = 20 + static_cast<std::uint32_t>((seed % 10) * 18);
    std::uint64_t full = std::uint64_t{n} * (n - 1) / 2;
    GraphInput g = random_graph(n, std::min<std::uint64_t>(full, n + seed % 40),
                                seed);
    Dsu d(n + 1);
    for (VertexId v = 1; v <= n; ++v) d.activate(v);
    for (const Edge& e : g.edges) d.unite(e.u, e.v);
    auto comp = oracles::bfs_components(n + 1, g.edges, false);
    for (VertexId a = 1; a <= n; ++a)
      for (VertexId b = a + 1; b <= n; ++b)
        if ((d.find(a) == d.find(b)) != (comp[a] == comp[b]))
          ++partition_mismatches;
  }

  // sweep after each reversal vs a full rescan of stored edges
  std::uint64_t sweep_mismatches = 0, sweeps = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    std::uint32_t n = 30;
    DfsTree t(n, 0);
    std::uint64_t s = oracles::mix64(seed ^ 0xabcdef);
    std::vector<VertexId> parent(n, kNoVertex);
    for (VertexId v = 1; v < n; ++v) {
      VertexId p = static_cast<VertexId>(splitmix64_next(s) % v);
      parent[v] = p;
      t.attach(v, p);
    }
    SpaceMeter meter(1 << 20, true);
    SubgraphH h(n, meter);
    for (VertexId v = 1; v < n; ++v) h.add_edge(v, parent[v]);

    std::set<std::pair<VertexId, VertexId>> expected;
    RestructureHooks hooks;
    hooks.on_reversal = [&](const DfsTree& tree, const SubgraphH& sub,
                            std::span<const VertexId>) {
      expected.clear();
      for (VertexId a = 0; a < n; ++a)
        for (VertexId b : sub.neighbors(a)) {
          if (a > b) continue;
          bool is_tree = tree.parent(a) == b || tree.parent(b) == a;
          if (!is_tree && !tree.ancestor_related(a, b)) expected.insert({a, b});
        }
    };
    hooks.on_collected = [&](std::span<const Edge> collected) {
      ++sweeps;
      std::set<std::pair<VertexId, VertexId>> got;
      for (const Edge& e : collected) got.insert(std::minmax(e.u, e.v));
      if (got != expected) ++sweep_mismatches;
    };

    GraphInput g = random_graph(n - 1, 2 * n, seed * 31 + 5);
    for (const Edge& e : g.edges) {
      if (t.ancestor_related(e.u, e.v) || h.has_edge(e.u, e.v)) continue;
      maintain_dfs(t, h, e, 0xFFFFFFFFu, nullptr, nullptr, &hooks);
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "100 graphs: union-find matches BFS partition (%llu "
                "mismatches); %llu reversal sweeps matched a full rescan "
                "(%llu mismatches)",
                static_cast<unsigned long long>(partition_mismatches),
                static_cast<unsigned long long>(sweeps),
                static_cast<unsigned long long>(sweep_mismatches));
  report(6, partition_mismatches == 0 && sweep_mismatches == 0 && sweeps > 100,
         buf);
}

void criterion_7_pass_means() {
  constexpr double kPathLo = 2.0, kPathHi = 3.5;
  constexpr double kLevLo = 3.0, kLevHi = 4.5;
  auto t0 = std::chrono::steady_clock::now();
  std::uint32_t n = 1000, k = 10;
  std::uint64_t m = 6908;  // ceil(n * ln n)
  double kpath_sum = 0, klev_sum = 0;
  std::uint32_t invalid = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GraphInput g = random_graph(n, m, seed);
    RunResult rp = run(Algorithm::kpath, g, k);
    RunResult rl = run(Algorithm::klev, g, k);
    kpath_sum += static_cast<double>(rp.stats.passes);
    klev_sum += static_cast<double>(rl.stats.passes);
    if (!validate_dfs(g, rp.tree).valid) ++invalid;
    if (!validate_dfs(g, rl.tree).valid) ++invalid;
  }
  double kpath_mean = kpath_sum / 20, klev_mean = klev_sum / 20;
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0)
                    .count();
  bool ok = kpath_mean >= kPathLo && kpath_mean <= kPathHi &&
            klev_mean >= kLevLo && klev_mean <= kLevHi && invalid == 0 &&
            secs < 60.0;
  char buf[220];
  std::snprintf(buf, sizeof buf,
                "n=1000 m=6908 k=10, 20 trials: kpath mean %.2f passes "
                "(want [%.1f,%.1f]), klev mean %.2f (want [%.1f,%.1f]), "
                "%u invalid, %.1fs (< 60s)",
                kpath_mean, kPathLo, kPathHi, klev_mean, kLevLo, kLevHi,
                invalid, secs);
  report(7, ok, buf);
}

void criterion_8_border_graph(const std::string& data_dir) {
  std::string path = data_dir + "/cu.txt";
  GraphInput g;
  try {
    g = load_edge_list_file(path);
  } catch (const IoError&) {
    // explicitly a skip, not a failure
    report(8, true, "skipped: border dataset not present at " + path);
    return;
  }
  RunResult rp = run(Algorithm::kpath, g, 5);
  RunResult rl = run(Algorithm::klev, g, 1);
  bool ok = g.n_original == 49 && g.m_original() == 107 &&
            validate_dfs(g, rp.tree).valid && validate_dfs(g, rl.tree).valid &&
            rp.stats.passes <= 3 && rl.stats.passes <= 4;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "state border graph (49 vertices, 107 edges): kpath k=5 in "
                "%llu passes (<= 3), klev k=1 in %llu passes (<= 4)",
                static_cast<unsigned long long>(rp.stats.passes),
                static_cast<unsigned long long>(rl.stats.passes));
  report(8, ok, buf);
}

void criterion_9_scale_smoke() {
  std::uint32_t n = 2000, k = 10;
  auto m = static_cast<std::uint64_t>(
      std::ceil(n * std::log(static_cast<double>(n))));
  GraphInput g = random_graph(n, m, 1);
  RunResult rs = run(Algorithm::simp, g, k);
  RunResult rp = run(Algorithm::kpath, g, k);
  RunResult rl = run(Algorithm::klev, g, k);
  bool valid = validate_dfs(g, rs.tree).valid &&
               validate_dfs(g, rp.tree).valid &&
               validate_dfs(g, rl.tree).valid;
  bool ok = valid && rp.stats.passes * 10 <= rs.stats.passes &&
            rl.stats.passes * 10 <= rs.stats.passes;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "n=2000 m=%llu: simp %llu passes; kpath %llu and klev %llu "
                "both at most a tenth of that",
                static_cast<unsigned long long>(m),
                static_cast<unsigned long long>(rs.stats.passes),
                static_cast<unsigned long long>(rp.stats.passes),
                static_cast<unsigned long long>(rl.stats.passes));
  report(9, ok, buf);
}

}  // namespace

int main(int argc, char** argv) {
  std::string data_dir = argc > 1 ? argv[1] : "tests/data";
  try {
    build_corpus();
    criterion_1_validity();
    criterion_2_pass_laws();
    criterion_3_space_bounds();
    criterion_4_min_height_paths();
    criterion_5_monotone_fall();
    criterion_6_bookkeeping_oracles();
    criterion_7_pass_means();
    criterion_8_border_graph(data_dir);
    criterion_9_scale_smoke();
  } catch (const std::exception& e) {
    std::printf("FAIL: unexpected exception: %s\n", e.what());
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
