#pragma once

#include <algorithm>
#include <functional>
#include <span>
#include <vector>

#include "dfs_stream/dfs_tree.hpp"
#include "dfs_stream/space_meter.hpp"
#include "dfs_stream/types.hpp"

namespace dfs_stream {

// Stored subgraph for one component: the working tree's edges plus the
// retained non-tree edges. Adjacency is kept per global vertex id; since
// live components are vertex-disjoint, one instance is shared by all of
// them. Every add/remove is charged to the meter.
class SubgraphH {
 public:
  SubgraphH(std::uint32_t n_slots, SpaceMeter& meter)
      : adj_(n_slots), meter_(&meter) {}

  bool has_edge(VertexId a, VertexId b) const {
    const auto& list = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
    VertexId probe = adj_[a].size() <= adj_[b].size() ? b : a;
    for (VertexId u : list)
      if (u == probe) return true;
    return false;
  }

  void add_edge(VertexId a, VertexId b) {
    DFS_CHECK(a != b && !has_edge(a, b), "subgraph: bad edge add");
    adj_[a].push_back(b);
    adj_[b].push_back(a);
    ++live_edges_;
    meter_->charge(+1, "subgraph.edge");
  }

  void remove_edge(VertexId a, VertexId b) {
    auto drop = [](std::vector<VertexId>& list, VertexId u) {
      auto it = std::find(list.begin(), list.end(), u);
      DFS_CHECK(it != list.end(), "subgraph: edge not present");
      list.erase(it);
    };
    drop(adj_[a], b);
    drop(adj_[b], a);
    --live_edges_;
    meter_->charge(-1, "subgraph.edge");
  }

  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
  std::uint64_t live_edges() const { return live_edges_; }
  SpaceMeter& meter() const { return *meter_; }

 private:
  std::vector<std::vector<VertexId>> adj_;
  std::uint64_t live_edges_ = 0;
  SpaceMeter* meter_;
};

// Pending reinsertions, processed newest-first.
class EdgePool {
 public:
  explicit EdgePool(SpaceMeter& meter) : meter_(&meter) {}

  void push(Edge e) {
    stack_.push_back(e);
    meter_->charge(+1, "pool.edge");
    if (stack_.size() > peak_) peak_ = stack_.size();
  }

  bool pop(Edge& e) {
    if (stack_.empty()) return false;
    e = stack_.back();
    stack_.pop_back();
    meter_->charge(-1, "pool.edge");
    return true;
  }

  bool empty() const { return stack_.empty(); }
  std::size_t peak() const { return peak_; }

 private:
  std::vector<Edge> stack_;
  std::size_t peak_ = 0;
  SpaceMeter* meter_;
};

// LCA of x and y with level(x) >= level(y). When y is an ancestor of x
// the edge (x,y) is a back edge: w == y and v is unset. Otherwise v is
// the child of w on the path toward y.
struct LcaResult {
  VertexId w = kNoVertex;
  VertexId v = kNoVertex;
  bool back = false;
};
LcaResult find_path_vertex_v(const DfsTree& t, VertexId x, VertexId y);

// Test instrumentation points inside maintain_dfs.
struct RestructureHooks {
  // after a reversal's levels settle, before its cross-edge sweep
  std::function<void(const DfsTree&, const SubgraphH&,
                     std::span<const VertexId> rehung)>
      on_reversal;
  // the edges that sweep moved to the pool
  std::function<void(std::span<const Edge> collected)> on_collected;
};

struct MaintainResult {
  std::uint64_t reversals = 0;
  std::uint64_t edges_processed = 0;
  std::uint64_t edges_evicted = 0;
};

// Sweeps the non-tree stored edges incident on `rehung` after a reversal:
// edges that lost their ancestor-descendant relation move to the pool;
// related edges with both endpoints at level >= k_evict leave storage for
// good (they stay back edges under every later fall). Returns the pooled
// edges. `rehung` must list parents before their descendants.
std::vector<Edge> collect_new_cross_edges(const DfsTree& t, SubgraphH& h,
                                          std::span<const VertexId> rehung,
                                          std::uint32_t k_evict,
                                          EdgePool& pool);

// Inserts `start` into the stored subgraph and restores the DFS property
// by repeated path reversals. Vertex levels never decrease, and strictly
// increase for every vertex a reversal moves; this bounds the work and is
// checked on every reversal. With k < n_slots, the top-k slice boundary
// drives both eviction and rep maintenance; pass k = UINT32_MAX to keep
// every edge. `rep` and `dirty` are optional; dirty marks moved vertices.
MaintainResult maintain_dfs(DfsTree& t, SubgraphH& h, Edge start,
                            std::uint32_t k, RepIndex* rep,
                            std::vector<std::uint8_t>* dirty,
                            const RestructureHooks* hooks = nullptr);

}  // namespace dfs_stream
