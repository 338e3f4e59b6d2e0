#include "dfs_stream/restructure.hpp"

#include <algorithm>

namespace dfs_stream {

LcaResult find_path_vertex_v(const DfsTree& t, VertexId x, VertexId y) {
  DFS_CHECK(t.level(x) >= t.level(y), "find_path_vertex_v: x must be deeper");
  VertexId a = x;
  while (t.level(a) > t.level(y)) a = t.parent(a);
  if (a == y) return LcaResult{y, kNoVertex, true};
  VertexId b = y;
  VertexId below_b = kNoVertex;
  while (a != b) {
    below_b = b;
    a = t.parent(a);
    b = t.parent(b);
  }
  return LcaResult{a, below_b, false};
}

std::vector<Edge> collect_new_cross_edges(const DfsTree& t, SubgraphH& h,
                                          std::span<const VertexId> rehung,
                                          std::uint32_t k_evict,
                                          EdgePool& pool) {
  std::vector<Edge> collected;
  std::vector<VertexId> snapshot;
  for (VertexId v : rehung) {
    snapshot = h.neighbors(v);  // copy; removals below edit the live list
    for (VertexId u : snapshot) {
      if (!h.has_edge(v, u)) continue;  // removed via the other endpoint
      if (t.parent(v) == u || t.parent(u) == v) continue;
      if (t.ancestor_related(v, u)) {
        if (std::min(t.level(v), t.level(u)) >= k_evict) h.remove_edge(v, u);
        continue;
      }
      h.remove_edge(v, u);
      pool.push(Edge{v, u});
      collected.push_back(Edge{v, u});
    }
  }
  return collected;
}

MaintainResult maintain_dfs(DfsTree& t, SubgraphH& h, Edge start,
                            std::uint32_t k, RepIndex* rep,
                            std::vector<std::uint8_t>* dirty,
                            const RestructureHooks* hooks) {
  MaintainResult res;
  DFS_CHECK(t.contains(start.u) && t.contains(start.v),
            "maintain_dfs: edge endpoints must be in the tree");
  DFS_CHECK(!h.has_edge(start.u, start.v), "maintain_dfs: duplicate edge");

  EdgePool pool(h.meter());
  pool.push(start);

  std::vector<VertexId> chain;
  Edge e;
  while (pool.pop(e)) {
    ++res.edges_processed;
    VertexId x = e.u, y = e.v;
    if (t.level(x) < t.level(y)) std::swap(x, y);

    LcaResult lca = find_path_vertex_v(t, x, y);
    if (lca.back) {
      // back edge: store only if it touches the top-k slice
      if (std::min(t.level(x), t.level(y)) < k)
        h.add_edge(x, y);
      else
        ++res.edges_evicted;
      continue;
    }

    // cross edge: hang y's side under x, reversing the path y..v
    ++res.reversals;
    h.add_edge(x, y);
    chain.clear();
    for (VertexId c = y;; c = t.parent(c)) {
      chain.push_back(c);
      if (c == lca.v) break;
    }
    t.set_parent(y, x);
    for (std::size_t i = 1; i < chain.size(); ++i)
      t.set_parent(chain[i], chain[i - 1]);

    // relevel the moved subtree, parents first; every member must fall
    std::vector<VertexId> rehung = t.subtree_vertices(y);
    for (VertexId v : rehung) {
      std::uint32_t old_level = t.level(v);
      std::uint32_t new_level = t.level(t.parent(v)) + 1;
      DFS_CHECK(new_level > old_level, "maintain_dfs: level did not fall");
      t.set_level(v, new_level);
      if (rep != nullptr) rep->assign_from_parent(t, v, k);
      if (dirty != nullptr) (*dirty)[v] = 1;
    }

    if (hooks != nullptr && hooks->on_reversal)
      hooks->on_reversal(t, h, rehung);
    std::vector<Edge> collected =
        collect_new_cross_edges(t, h, rehung, k, pool);
    if (hooks != nullptr && hooks->on_collected) hooks->on_collected(collected);
  }
  return res;
}

}  // namespace dfs_stream
