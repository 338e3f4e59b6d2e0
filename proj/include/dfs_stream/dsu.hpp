#pragma once

#include <span>
#include <vector>

#include "dfs_stream/types.hpp"

namespace dfs_stream {

// Union-find over a subset of vertex ids (union by rank, full path
// compression). Only activated ids may be touched; this catches stale
// component bookkeeping early.
class Dsu {
 public:
  explicit Dsu(std::uint32_t n_slots)
      : parent_(n_slots, kNoVertex), rank_(n_slots, 0) {}

  void activate(VertexId x) {
    DFS_CHECK(x < parent_.size(), "dsu: id out of range");
    parent_[x] = x;
    rank_[x] = 0;
  }

  bool active(VertexId x) const {
    return x < parent_.size() && parent_[x] != kNoVertex;
  }

  // Only whole sets may be retired; deactivating part of a set leaves
  // dangling pointers for the rest.
  void deactivate(VertexId x) {
    DFS_CHECK(active(x), "dsu: deactivate on inactive id");
    parent_[x] = kNoVertex;
  }

  VertexId find(VertexId x) {
    DFS_CHECK(active(x), "dsu: find on inactive id");
    VertexId root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      VertexId up = parent_[x];
      parent_[x] = root;
      x = up;
    }
    return root;
  }

  // True when the sets were distinct and got merged.
  bool unite(VertexId a, VertexId b) {
    VertexId ra = find(a), rb = find(b);
    if (ra == rb) return false;
    if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    return true;
  }

 private:
  std::vector<VertexId> parent_;
  std::vector<std::uint8_t> rank_;
};

struct ComponentSplit {
  // Component label per queried id (the DSU root), and one spanning tree
  // per component as the subset of input edges that merged two sets.
  std::vector<VertexId> members;       // all active ids, ascending
  std::vector<VertexId> label;         // label[i] matches members[i]
  std::vector<Edge> forest;
};

// Runs the full union-find pass over `edges`, restricted to `active` ids.
// Edges touching inactive ids are skipped.
ComponentSplit components_and_spanning_forest(std::span<const Edge> edges,
                                              std::span<const VertexId> active,
                                              std::uint32_t n_slots);

}  // namespace dfs_stream
