#include "dfs_stream/algorithms.hpp"

#include <algorithm>
#include <map>

#include "algo_internal.hpp"

namespace dfs_stream {

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::simpo: return "simpo";
    case Algorithm::simp: return "simp";
    case Algorithm::imprv: return "imprv";
    case Algorithm::kpath: return "kpath";
    case Algorithm::klevo: return "klevo";
    case Algorithm::klev: return "klev";
  }
  return "?";
}

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
  for (Algorithm a : {Algorithm::simpo, Algorithm::simp, Algorithm::imprv,
                      Algorithm::kpath, Algorithm::klevo, Algorithm::klev})
    if (name == algorithm_name(a)) return a;
  return std::nullopt;
}

std::uint64_t default_edge_budget(Algorithm a, std::uint32_t n_augmented,
                                  std::uint32_t k) {
  std::uint64_t n = n_augmented;
  switch (a) {
    case Algorithm::simpo:
    case Algorithm::simp: return n;
    case Algorithm::imprv: return 2 * n;
    case Algorithm::kpath: return n * (static_cast<std::uint64_t>(k) + 1);
    case Algorithm::klevo:
    case Algorithm::klev: return 4 * n * static_cast<std::uint64_t>(k);
  }
  return n;
}

namespace detail {

RunResult RunFrame::finish(RunDebug debug) {
  DFS_CHECK(done(), "run ended before the tree spanned");
  PassStats stats;
  stats.passes = stream.passes() - base_passes;
  stats.edges_scanned = stream.edges_scanned() - base_scanned;
  stats.peak_stored_edges = meter.peak();
  stats.tree_height = tree.height();
  stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  log_line(LogLevel::stats,
           "run " + std::string(algorithm_name(cfg.algo)) +
               ": passes=" + std::to_string(stats.passes) +
               " height=" + std::to_string(stats.tree_height) +
               " peak_edges=" + std::to_string(stats.peak_stored_edges) +
               " scanned=" + std::to_string(stats.edges_scanned));
  return RunResult{std::move(tree), stats, debug};
}

std::vector<CompSeed> spanning_pass(EdgeStream& stream, SpaceMeter& meter) {
  std::uint32_t n_aug = stream.n_augmented();
  Dsu dsu(n_aug);
  for (VertexId v = 1; v < n_aug; ++v) dsu.activate(v);

  std::vector<Edge> forest;
  stream.reset();
  Edge e;
  while (stream.next(e)) {
    if (e.u == kDummyRoot || e.v == kDummyRoot) continue;
    if (dsu.unite(e.u, e.v)) {
      forest.push_back(e);
      meter.charge(+1, "pass0.forest");
    }
  }

  // adjacency over the forest only; BFS from each class's minimum id
  std::vector<std::vector<VertexId>> adj(n_aug);
  for (const Edge& fe : forest) {
    adj[fe.u].push_back(fe.v);
    adj[fe.v].push_back(fe.u);
  }
  std::vector<std::uint8_t> placed(n_aug, 0);
  std::vector<std::uint8_t> class_seen(n_aug, 0);
  std::vector<CompSeed> comps;
  for (VertexId v = 1; v < n_aug; ++v) {
    VertexId rep = dsu.find(v);
    if (class_seen[rep]) continue;
    class_seen[rep] = 1;
    CompSeed seed;
    seed.root = v;  // ascending scan: first member is the minimum
    seed.members_bfs.push_back(v);
    placed[v] = 1;
    for (std::size_t i = 0; i < seed.members_bfs.size(); ++i) {
      VertexId at = seed.members_bfs[i];
      for (VertexId nb : adj[at]) {
        if (placed[nb]) continue;
        placed[nb] = 1;
        seed.tree_edges.push_back(Edge{at, nb});
        seed.members_bfs.push_back(nb);
      }
    }
    comps.push_back(std::move(seed));
  }
  return comps;
}

}  // namespace detail

namespace {

using detail::RunFrame;

// First edge seen this pass from an in-tree vertex to an unvisited one,
// one slot per in-tree vertex.
struct SlotStore {
  std::vector<VertexId> target;
  SpaceMeter* meter;
  std::uint64_t filled = 0;

  SlotStore(std::uint32_t n, SpaceMeter& m) : target(n, kNoVertex), meter(&m) {}

  void clear_all() {
    std::fill(target.begin(), target.end(), kNoVertex);
    if (filled > 0) meter->charge(-static_cast<std::int64_t>(filled), "slots");
    filled = 0;
  }
  void offer(VertexId at, VertexId to) {
    if (target[at] != kNoVertex) return;
    target[at] = to;
    ++filled;
    meter->charge(+1, "slots");
  }
};

RunResult run_simple(EdgeStream& stream, const AlgoConfig& cfg, bool chase) {
  RunFrame f(stream, cfg);
  SlotStore slots(f.n_aug, f.meter);
  VertexId tip = kDummyRoot;
  // Pass in which each vertex joined the tree; mid-pass joiners missed
  // the earlier part of their pass, so their slots prove nothing.
  std::vector<std::uint64_t> joined(f.n_aug, 0);

  while (!f.done()) {
    std::uint32_t before = f.visited_count;
    stream.reset();
    slots.clear_all();
    Edge e;
    while (stream.next(e)) {
      bool vu = f.visited[e.u] != 0, vv = f.visited[e.v] != 0;
      if (vu == vv) continue;  // both settled or both unknown
      VertexId in_t = vu ? e.u : e.v;
      VertexId out_t = vu ? e.v : e.u;
      if (chase && in_t == tip) {
        f.commit(out_t, in_t);
        joined[out_t] = f.passes();
        tip = out_t;
        if (f.done()) break;  // partial pass still counts
        continue;
      }
      slots.offer(in_t, out_t);
    }

    if (!f.done()) {
      // Retreat: walk up from the tip to the nearest stored extension.
      // Popping a vertex needs proof that it has no unvisited neighbour
      // left. An empty slot is that proof, but only for a vertex that
      // was in the tree for the entire pass; the walk stops without
      // popping at a mid-pass joiner or at a slot whose target was
      // claimed by the chase, since either may still have work.
      std::uint64_t this_pass = f.passes();
      VertexId at = tip;
      for (;;) {
        VertexId to = slots.target[at];
        if (to != kNoVertex && !f.visited[to]) {
          f.commit(to, at);
          joined[to] = this_pass;
          tip = to;
          break;
        }
        if (to != kNoVertex || joined[at] == this_pass) {
          tip = at;
          break;
        }
        DFS_CHECK(at != kDummyRoot, "retreat walked past the root");
        at = f.tree.parent(at);
      }
    }
    DFS_CHECK(f.visited_count > before, "pass made no progress");
    f.fire_pass_hook();
  }
  DFS_CHECK(f.passes() <= f.n_aug - 1 || f.n_aug == 1, "pass count exceeded n");
  if (!chase)
    DFS_CHECK(f.passes() == f.n_aug - 1, "pass count must equal n");
  return f.finish(RunDebug{});
}

RunResult run_level_sync(EdgeStream& stream, const AlgoConfig& cfg) {
  RunFrame f(stream, cfg);
  std::vector<VertexId> leaf_edge(f.n_aug, kNoVertex);  // unvisited -> leaf
  std::uint64_t slot_count = 0;

  while (!f.done()) {
    stream.reset();

    // leaves are fixed at pass start
    std::vector<std::uint8_t> is_leaf(f.n_aug, 0);
    for (VertexId v = 0; v < f.n_aug; ++v)
      if (f.visited[v] && f.tree.children(v).empty()) is_leaf[v] = 1;

    Dsu dsu(f.n_aug);
    for (VertexId v = 1; v < f.n_aug; ++v)
      if (!f.visited[v]) dsu.activate(v);

    Edge e;
    while (stream.next(e)) {
      bool vu = f.visited[e.u] != 0, vv = f.visited[e.v] != 0;
      if (vu && vv) continue;
      if (!vu && !vv) {
        dsu.unite(e.u, e.v);
        continue;
      }
      VertexId in_t = vu ? e.u : e.v;
      VertexId out_t = vu ? e.v : e.u;
      if (is_leaf[in_t] && leaf_edge[out_t] == kNoVertex) {
        leaf_edge[out_t] = in_t;
        ++slot_count;
        f.meter.charge(+1, "leaf_edge");
      }
    }

    // per component, the smallest id holding a leaf edge joins the tree
    std::map<VertexId, std::pair<VertexId, VertexId>> pick;  // root -> (y, leaf)
    for (VertexId y = 1; y < f.n_aug; ++y) {
      if (f.visited[y] || leaf_edge[y] == kNoVertex) continue;
      VertexId r = dsu.find(y);
      if (!pick.contains(r)) pick[r] = {y, leaf_edge[y]};
    }
    DFS_CHECK(!pick.empty(), "pass made no progress");
    for (const auto& [r, yx] : pick) f.commit(yx.first, yx.second);

    std::fill(leaf_edge.begin(), leaf_edge.end(), kNoVertex);
    if (slot_count > 0) {
      f.meter.charge(-static_cast<std::int64_t>(slot_count), "leaf_edge");
      slot_count = 0;
    }
    f.fire_pass_hook();
  }
  DFS_CHECK(f.passes() == f.tree.height(), "pass count must equal height");
  return f.finish(RunDebug{});
}

}  // namespace

RunResult run_simp_o(EdgeStream& stream, const AlgoConfig& cfg) {
  AlgoConfig c = cfg;
  c.algo = Algorithm::simpo;
  return run_simple(stream, c, /*chase=*/false);
}

RunResult run_simp(EdgeStream& stream, const AlgoConfig& cfg) {
  AlgoConfig c = cfg;
  c.algo = Algorithm::simp;
  return run_simple(stream, c, /*chase=*/true);
}

RunResult run_imprv(EdgeStream& stream, const AlgoConfig& cfg) {
  AlgoConfig c = cfg;
  c.algo = Algorithm::imprv;
  return run_level_sync(stream, c);
}

RunResult run_algorithm(EdgeStream& stream, const AlgoConfig& cfg) {
  if ((cfg.algo == Algorithm::kpath || cfg.algo == Algorithm::klevo ||
       cfg.algo == Algorithm::klev) &&
      cfg.k == 0)
    throw InvalidArgument("k must be at least 1");
  switch (cfg.algo) {
    case Algorithm::simpo: return run_simp_o(stream, cfg);
    case Algorithm::simp: return run_simp(stream, cfg);
    case Algorithm::imprv: return run_imprv(stream, cfg);
    case Algorithm::kpath: return run_k_path(stream, cfg);
    case Algorithm::klevo:
    case Algorithm::klev: return run_k_lev(stream, cfg);
  }
  throw InvalidArgument("unknown algorithm");
}

}  // namespace dfs_stream
