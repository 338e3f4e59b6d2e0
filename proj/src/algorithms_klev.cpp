#include "algo_internal.hpp"
#include "dfs_stream/algorithms.hpp"
#include "dfs_stream/restructure.hpp"

namespace dfs_stream {

namespace {

using detail::CompSeed;
using detail::RunFrame;

struct KlComp {
  VertexId root = kNoVertex;
  VertexId attach_parent = kNoVertex;
  std::vector<VertexId> members;  // root first, parents before children
};

class KLevRunner {
 public:
  KLevRunner(EdgeStream& s, const AlgoConfig& cfg)
      : f(s, cfg),
        heuristic(cfg.algo == Algorithm::klev),
        arena(f.n_aug),
        h(f.n_aug, f.meter),
        rep(f.n_aug),
        comp_of(f.n_aug, UINT32_MAX),
        dirty(f.n_aug, 0),
        blocked(f.n_aug, 0) {}

  RunResult run() {
    for (CompSeed& seed : detail::spanning_pass(f.stream, f.meter)) {
      spawn(seed.root, kDummyRoot, std::move(seed.members_bfs));
      arena.seed_root(seed.root);
      for (const Edge& te : seed.tree_edges) {
        arena.attach(te.v, te.u);
        h.add_edge(te.u, te.v);
        f.meter.charge(-1, "pass0.forest_transfer");
      }
    }
    sort_live();
    fill_provisional();
    f.fire_pass_hook();

    while (!live.empty()) {
      pass_begin();
      f.stream.reset();
      Edge e;
      while (f.stream.next(e)) dispatch(e);
      pass_end();
      fill_provisional();
      f.fire_pass_hook();
    }

    if (f.n_aug > 1) {
      std::uint64_t height = f.tree.height();
      std::uint64_t bound = 1 + (height + f.cfg.k - 1) / f.cfg.k;
      if (heuristic)
        DFS_CHECK(f.passes() <= bound, "pass bound exceeded");
      else
        DFS_CHECK(f.passes() == bound, "pass count must be 1 + ceil(h/k)");
    }
    return f.finish(dbg);
  }

 private:
  std::uint32_t spawn(VertexId root, VertexId attach_parent,
                      std::vector<VertexId> members) {
    ++dbg.components_seen;
    std::uint32_t ci = static_cast<std::uint32_t>(comps.size());
    KlComp kc;
    kc.root = root;
    kc.attach_parent = attach_parent;
    kc.members = std::move(members);
    for (VertexId v : kc.members) comp_of[v] = ci;
    comps.push_back(std::move(kc));
    live.push_back(ci);
    return ci;
  }

  void sort_live() {
    std::sort(live.begin(), live.end(), [&](std::uint32_t a, std::uint32_t b) {
      return comps[a].root < comps[b].root;
    });
  }

  void pass_begin() {
    for (std::uint32_t ci : live)
      for (VertexId v : comps[ci].members) {
        dirty[v] = 0;
        rep.assign_from_parent(arena, v, f.cfg.k);
      }
  }

  void dispatch(Edge e) {
    bool vu = f.visited[e.u] != 0, vv = f.visited[e.v] != 0;
    if (vu || vv) return;  // settled-incident edges are back edges already
    std::uint32_t ci = comp_of[e.u];
    DFS_CHECK(ci != UINT32_MAX && ci == comp_of[e.v],
              "edge crosses component bounds");
    if (h.has_edge(e.u, e.v)) return;  // tree edges and duplicates

    // Edges inside one hanging tree can be skipped: they resurface once
    // the sinking slice reaches them. The early-commit variant feeds them
    // through anyway (stored only if they touch the slice, so space is
    // unchanged) so that by pass end every surviving pair is ancestor
    // related and a quiet chain is safe to settle.
    if (!heuristic && rep.get(e.u) == rep.get(e.v)) return;
    MaintainResult res = maintain_dfs(arena, h, e, f.cfg.k, &rep, &dirty);
    dbg.reversals += res.reversals;
  }

  void close_component(std::uint32_t ci) {
    KlComp& kc = comps[ci];
    std::uint32_t k = f.cfg.k;

    // Walk the tree as it stands now (restructuring has invalidated the
    // seed order; the walk yields parents before children). The top slice
    // always commits. A deeper vertex commits early when nothing on its
    // chain below the slice moved this pass; the rest survive as spawned
    // components rooted where the committed region ends.
    std::vector<VertexId> commit_order;
    std::vector<VertexId> spawn_roots;
    for (VertexId v : arena.subtree_vertices(kc.root)) {
      if (arena.level(v) < k) {
        commit_order.push_back(v);
        blocked[v] = 0;
        continue;
      }
      VertexId p = arena.parent(v);
      bool parent_blocked = arena.level(p) >= k && blocked[p] != 0;
      if (parent_blocked || !heuristic || dirty[v]) {
        blocked[v] = 1;
        if (!parent_blocked) spawn_roots.push_back(v);
      } else {
        blocked[v] = 0;
        commit_order.push_back(v);
        ++dbg.early_commits;
      }
    }

    DFS_CHECK(!commit_order.empty() && commit_order[0] == kc.root,
              "component root must commit first");
    f.commit(kc.root, kc.attach_parent);
    for (std::size_t i = 1; i < commit_order.size(); ++i)
      f.commit(commit_order[i], arena.parent(commit_order[i]));

    // drop every stored edge with a committed endpoint; tree edges of the
    // commit become output, back edges onto it are spent
    std::vector<VertexId> snapshot;
    for (VertexId v : commit_order) {
      snapshot = h.neighbors(v);
      for (VertexId u : snapshot)
        if (h.has_edge(v, u)) h.remove_edge(v, u);
    }

    for (VertexId rho : spawn_roots) {
      std::vector<VertexId> subtree = arena.subtree_vertices(rho);
      VertexId attach = arena.parent(rho);
      arena.make_root(rho);
      for (std::size_t i = 1; i < subtree.size(); ++i) {
        VertexId v = subtree[i];
        arena.set_level(v, arena.level(arena.parent(v)) + 1);
      }
      spawn(rho, attach, std::move(subtree));
    }

    for (VertexId v : commit_order) {
      arena.clear_vertex(v);
      comp_of[v] = UINT32_MAX;
    }
  }

  void pass_end() {
    std::vector<std::uint32_t> working = live;
    live.clear();
    for (std::uint32_t ci : working) close_component(ci);
    sort_live();
  }

  void fill_provisional() {
    std::fill(f.provisional.begin(), f.provisional.end(), kNoLevel);
    for (std::uint32_t ci : live) {
      const KlComp& kc = comps[ci];
      std::uint32_t base = f.tree.level(kc.attach_parent) + 1;
      for (VertexId v : kc.members)
        f.provisional[v] = base + arena.level(v);
    }
  }

  RunFrame f;
  bool heuristic;
  DfsTree arena;
  SubgraphH h;
  RepIndex rep;
  std::vector<std::uint32_t> comp_of;
  std::vector<KlComp> comps;
  std::vector<std::uint32_t> live;
  std::vector<std::uint8_t> dirty, blocked;
  RunDebug dbg;
};

}  // namespace

RunResult run_k_lev(EdgeStream& stream, const AlgoConfig& cfg) {
  if (cfg.k == 0) throw InvalidArgument("k must be at least 1");
  AlgoConfig c = cfg;
  if (c.algo != Algorithm::klevo) c.algo = Algorithm::klev;
  return KLevRunner(stream, c).run();
}

}  // namespace dfs_stream
