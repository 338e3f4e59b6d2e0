#include <unordered_set>

#include "algo_internal.hpp"
#include "dfs_stream/algorithms.hpp"

namespace dfs_stream {

namespace {

using detail::CompSeed;
using detail::RunFrame;

struct KpComp {
  VertexId root = kNoVertex;
  VertexId attach_parent = kNoVertex;
  bool attach_charged = false;  // split children hold their attach edge
  bool split = false;
  std::uint64_t cap = 0;
  std::vector<VertexId> members;
  std::vector<Edge> buffered;
  std::unordered_set<std::uint64_t> buffer_keys;
  std::vector<Edge> forest;  // merge edges while splitting
};

class KPathRunner {
 public:
  KPathRunner(EdgeStream& s, const AlgoConfig& cfg)
      : f(s, cfg),
        arena(f.n_aug),
        comp_of(f.n_aug, UINT32_MAX),
        path_comp(f.n_aug, UINT32_MAX),
        dsu(f.n_aug),
        cand_x(f.n_aug, kNoVertex),
        cand_y(f.n_aug, kNoVertex),
        cand_level(f.n_aug, 0),
        cand_seq(f.n_aug, 0),
        aux_adj(f.n_aug),
        scratch_ix(f.n_aug, UINT32_MAX),
        scratch_flag(f.n_aug, 0) {}

  RunResult run() {
    for (CompSeed& seed : detail::spanning_pass(f.stream, f.meter))
      spawn(seed.root, kDummyRoot, false, std::move(seed.members_bfs),
            seed.tree_edges);
    sort_live();
    f.fire_pass_hook();

    while (!live.empty()) {
      f.stream.reset();
      Edge e;
      while (f.stream.next(e)) dispatch(e);
      pass_end();
      f.fire_pass_hook();
    }

    std::uint64_t n_orig = f.n_aug - 1;
    std::uint64_t bound = 1 + (n_orig + f.cfg.k - 1) / f.cfg.k;
    DFS_CHECK(f.passes() <= bound, "pass bound exceeded");
    return f.finish(dbg);
  }

 private:
  std::uint64_t edge_key(Edge e) const {
    VertexId a = std::min(e.u, e.v), b = std::max(e.u, e.v);
    return static_cast<std::uint64_t>(a) * f.n_aug + b;
  }

  std::uint32_t spawn(VertexId root, VertexId attach_parent,
                      bool attach_charged, std::vector<VertexId> members,
                      const std::vector<Edge>& tree_edges) {
    ++dbg.components_seen;
    std::uint32_t ci = static_cast<std::uint32_t>(comps.size());
    KpComp kc;
    kc.root = root;
    kc.attach_parent = attach_parent;
    kc.attach_charged = attach_charged;
    kc.cap = static_cast<std::uint64_t>(members.size()) * f.cfg.k;
    kc.members = std::move(members);
    for (VertexId v : kc.members) comp_of[v] = ci;
    arena.seed_root(root);
    for (const Edge& te : tree_edges) arena.attach(te.v, te.u);
    comps.push_back(std::move(kc));
    live.push_back(ci);
    return ci;
  }

  void sort_live() {
    std::sort(live.begin(), live.end(), [&](std::uint32_t a, std::uint32_t b) {
      return comps[a].root < comps[b].root;
    });
  }

  void dispatch(Edge e) {
    bool vu = f.visited[e.u] != 0, vv = f.visited[e.v] != 0;
    if (vu && vv) return;
    if (vu != vv) {
      VertexId t = vu ? e.u : e.v, u = vu ? e.v : e.u;
      std::uint32_t ci = comp_of[u];
      if (comps[ci].split && path_comp[t] == ci) offer(dsu.find(u), t, u);
      return;
    }
    std::uint32_t ci = comp_of[e.u];
    DFS_CHECK(ci != UINT32_MAX && ci == comp_of[e.v],
              "edge crosses component bounds");
    if (comps[ci].split)
      union_members(ci, e);
    else
      buffer_edge(ci, e);
  }

  void buffer_edge(std::uint32_t ci, Edge e) {
    KpComp& kc = comps[ci];
    if (arena.parent(e.u) == e.v || arena.parent(e.v) == e.u) return;
    std::uint64_t key = edge_key(e);
    if (kc.buffer_keys.contains(key)) return;
    if (kc.buffered.size() < kc.cap) {
      kc.buffered.push_back(e);
      kc.buffer_keys.insert(key);
      f.meter.charge(+1, "kpath.buffer");
      return;
    }
    overflow(ci, e);
  }

  // lowest-edge candidate per union-find class: deepest path vertex wins,
  // stream order breaks ties
  void offer(VertexId r, VertexId x, VertexId y) {
    std::uint32_t xl = f.tree.level(x);
    if (cand_y[r] == kNoVertex) {
      f.meter.charge(+1, "kpath.cand");
      cand_x[r] = x;
      cand_y[r] = y;
      cand_level[r] = xl;
      cand_seq[r] = seq;
    } else if (xl > cand_level[r]) {
      cand_x[r] = x;
      cand_y[r] = y;
      cand_level[r] = xl;
      cand_seq[r] = seq;
    }
    ++seq;
  }

  void union_members(std::uint32_t ci, Edge e) {
    VertexId ra = dsu.find(e.u), rb = dsu.find(e.v);
    if (ra == rb) return;
    dsu.unite(ra, rb);
    VertexId r = dsu.find(ra);
    VertexId other = r == ra ? rb : ra;
    if (cand_y[other] != kNoVertex) {
      if (cand_y[r] == kNoVertex) {
        cand_x[r] = cand_x[other];
        cand_y[r] = cand_y[other];
        cand_level[r] = cand_level[other];
        cand_seq[r] = cand_seq[other];
      } else {
        if (cand_level[other] > cand_level[r] ||
            (cand_level[other] == cand_level[r] &&
             cand_seq[other] < cand_seq[r])) {
          cand_x[r] = cand_x[other];
          cand_y[r] = cand_y[other];
          cand_level[r] = cand_level[other];
          cand_seq[r] = cand_seq[other];
        }
        f.meter.charge(-1, "kpath.cand_merge");
      }
      cand_y[other] = kNoVertex;
    }
    comps[ci].forest.push_back(e);
    f.meter.charge(+1, "kpath.forest");
  }

  void feed(std::uint32_t ci, Edge e) {
    bool vu = f.visited[e.u] != 0, vv = f.visited[e.v] != 0;
    if (vu && vv) return;
    if (vu != vv) {
      VertexId t = vu ? e.u : e.v, u = vu ? e.v : e.u;
      if (path_comp[t] == ci) offer(dsu.find(u), t, u);
      return;
    }
    union_members(ci, e);
  }

  // buffer full: peel the deepest path of the auxiliary tree, then fall
  // back to union-find splitting for the rest of the pass
  void overflow(std::uint32_t ci, Edge trigger) {
    KpComp& kc = comps[ci];
    ++dbg.path_extractions;

    std::vector<Edge> old_tc;
    old_tc.reserve(kc.members.size());
    for (VertexId v : kc.members)
      if (arena.parent(v) != kNoVertex) old_tc.push_back({arena.parent(v), v});

    build_aux(kc, old_tc);

    VertexId best = kc.root;
    for (VertexId v : kc.members)
      if (arena.level(v) > arena.level(best) ||
          (arena.level(v) == arena.level(best) && v < best))
        best = v;
    std::vector<VertexId> path;
    for (VertexId v = best;; v = arena.parent(v)) {
      path.push_back(v);
      if (v == kc.root) break;
    }
    std::reverse(path.begin(), path.end());
    DFS_CHECK(path.size() >= static_cast<std::uint64_t>(f.cfg.k) + 1,
              "extracted path shorter than k");
    if (dbg.min_extracted_path == 0 || path.size() < dbg.min_extracted_path)
      dbg.min_extracted_path = static_cast<std::uint32_t>(path.size());

    VertexId par = kc.attach_parent;
    for (VertexId v : path) {
      f.commit(v, par);
      par = v;
      path_comp[v] = ci;
      pass_paths.push_back(v);
      comp_of[v] = UINT32_MAX;
    }
    if (kc.attach_charged) {
      f.meter.charge(-1, "kpath.attach_done");
      kc.attach_charged = false;
    }

    for (VertexId v : kc.members)
      if (!f.visited[v]) dsu.activate(v);
    kc.split = true;

    // transfer: each stored edge is released as it is replayed, so the
    // peak never rises above the pre-split level
    for (const Edge& te : old_tc) {
      f.meter.charge(-1, "kpath.tc_feed");
      feed(ci, te);
    }
    for (const Edge& be : kc.buffered) {
      f.meter.charge(-1, "kpath.buffer_feed");
      feed(ci, be);
    }
    kc.buffered.clear();
    kc.buffered.shrink_to_fit();
    kc.buffer_keys.clear();
    feed(ci, trigger);
  }

  // offline DFS of the stored subgraph (tree edges first, then buffered,
  // both in recorded order), rewriting the arena slice in place
  void build_aux(KpComp& kc, const std::vector<Edge>& old_tc) {
    for (VertexId v : kc.members) arena.clear_vertex(v);
    for (const Edge& e : old_tc) {
      aux_adj[e.u].push_back(e.v);
      aux_adj[e.v].push_back(e.u);
    }
    for (const Edge& e : kc.buffered) {
      aux_adj[e.u].push_back(e.v);
      aux_adj[e.v].push_back(e.u);
    }
    arena.seed_root(kc.root);
    std::uint32_t reached = 1;
    std::vector<std::pair<VertexId, std::size_t>> stack{{kc.root, 0}};
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& nbrs = aux_adj[v];
      if (next < nbrs.size()) {
        VertexId nb = nbrs[next++];
        if (!arena.contains(nb)) {
          arena.attach(nb, v);
          ++reached;
          stack.emplace_back(nb, 0);
        }
      } else {
        stack.pop_back();
      }
    }
    DFS_CHECK(reached == kc.members.size(), "component not connected");
    for (VertexId v : kc.members) aux_adj[v].clear();
  }

  void finish_whole(std::uint32_t ci) {
    KpComp& kc = comps[ci];
    std::vector<Edge> old_tc;
    for (VertexId v : kc.members)
      if (arena.parent(v) != kNoVertex) old_tc.push_back({arena.parent(v), v});
    build_aux(kc, old_tc);

    std::vector<VertexId> order = arena.subtree_vertices(kc.root);
    f.commit(kc.root, kc.attach_parent);
    if (kc.attach_charged) {
      f.meter.charge(-1, "kpath.attach_done");
      kc.attach_charged = false;
    }
    for (std::size_t i = 1; i < order.size(); ++i)
      f.commit(order[i], arena.parent(order[i]));

    f.meter.charge(-static_cast<std::int64_t>(old_tc.size()),
                   "kpath.tc_done");
    f.meter.charge(-static_cast<std::int64_t>(kc.buffered.size()),
                   "kpath.buffer_done");
    kc.buffered.clear();
    kc.buffer_keys.clear();
    for (VertexId v : kc.members) {
      comp_of[v] = UINT32_MAX;
      arena.clear_vertex(v);
    }
  }

  void finalize_split(std::uint32_t ci) {
    KpComp& kc = comps[ci];
    // group the leftovers into classes keyed by their union-find root
    std::vector<VertexId> class_roots;
    std::vector<std::vector<VertexId>> class_members;
    for (VertexId v : kc.members) {
      if (f.visited[v]) continue;
      VertexId r = dsu.find(v);
      if (scratch_ix[r] == UINT32_MAX) {
        scratch_ix[r] = static_cast<std::uint32_t>(class_roots.size());
        class_roots.push_back(r);
        class_members.emplace_back();
      }
      class_members[scratch_ix[r]].push_back(v);
    }
    std::vector<std::vector<Edge>> class_forest(class_roots.size());
    for (const Edge& fe : kc.forest)
      class_forest[scratch_ix[dsu.find(fe.u)]].push_back(fe);

    // spawn order: ascending minimum member id
    std::vector<std::uint32_t> order(class_roots.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::vector<VertexId> class_min(class_roots.size());
    for (std::uint32_t i = 0; i < class_roots.size(); ++i) {
      VertexId mn = class_members[i][0];
      for (VertexId v : class_members[i]) mn = std::min(mn, v);
      class_min[i] = mn;
    }
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return class_min[a] < class_min[b];
    });

    for (std::uint32_t i : order) {
      VertexId r = class_roots[i];
      DFS_CHECK(cand_y[r] != kNoVertex, "leftover class missing a path edge");
      VertexId root = cand_y[r], attach = cand_x[r];
      cand_y[r] = kNoVertex;

      // orient the class forest from its new root
      for (const Edge& fe : class_forest[i]) {
        aux_adj[fe.u].push_back(fe.v);
        aux_adj[fe.v].push_back(fe.u);
      }
      for (VertexId v : class_members[i]) arena.clear_vertex(v);
      std::vector<VertexId> bfs{root};
      std::vector<Edge> tree_edges;
      scratch_flag[root] = 1;
      for (std::size_t at = 0; at < bfs.size(); ++at) {
        VertexId v = bfs[at];
        for (VertexId nb : aux_adj[v]) {
          if (scratch_flag[nb]) continue;
          scratch_flag[nb] = 1;
          tree_edges.push_back(Edge{v, nb});
          bfs.push_back(nb);
        }
      }
      DFS_CHECK(bfs.size() == class_members[i].size(),
                "class forest not spanning");
      for (VertexId v : class_members[i]) {
        aux_adj[v].clear();
        scratch_flag[v] = 0;
        dsu.deactivate(v);
      }
      spawn(root, attach, true, std::move(bfs), tree_edges);
    }
    for (VertexId r : class_roots) scratch_ix[r] = UINT32_MAX;
    // spawn() may have grown comps and moved kc; index afresh
    comps[ci].forest.clear();
    comps[ci].forest.shrink_to_fit();
  }

  void pass_end() {
    std::vector<std::uint32_t> working = live;
    live.clear();
    for (std::uint32_t ci : working) {
      if (comps[ci].split)
        finalize_split(ci);
      else
        finish_whole(ci);
    }
    sort_live();
    for (VertexId v : pass_paths) path_comp[v] = UINT32_MAX;
    pass_paths.clear();
  }

  RunFrame f;
  DfsTree arena;
  std::vector<std::uint32_t> comp_of;
  std::vector<std::uint32_t> path_comp;
  std::vector<KpComp> comps;
  std::vector<std::uint32_t> live;
  Dsu dsu;
  std::vector<VertexId> cand_x, cand_y;
  std::vector<std::uint32_t> cand_level;
  std::vector<std::uint64_t> cand_seq;
  std::vector<std::vector<VertexId>> aux_adj;
  std::vector<std::uint32_t> scratch_ix;
  std::vector<std::uint8_t> scratch_flag;
  std::vector<VertexId> pass_paths;
  std::uint64_t seq = 0;
  RunDebug dbg;
};

}  // namespace

RunResult run_k_path(EdgeStream& stream, const AlgoConfig& cfg) {
  if (cfg.k == 0) throw InvalidArgument("k must be at least 1");
  AlgoConfig c = cfg;
  c.algo = Algorithm::kpath;
  return KPathRunner(stream, c).run();
}

}  // namespace dfs_stream
