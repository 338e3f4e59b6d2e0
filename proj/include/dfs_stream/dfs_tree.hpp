#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dfs_stream/graph_input.hpp"
#include "dfs_stream/types.hpp"

namespace dfs_stream {

// Rooted tree over a fixed id range, with parent pointers, ordered child
// lists and levels (root at 0). Used both for the committed global tree
// and for per-component working trees; component trees keep global vertex
// ids but local levels.
class DfsTree {
 public:
  DfsTree(std::uint32_t n_slots, VertexId root);

  // Empty forest arena; populate with seed_root and attach.
  explicit DfsTree(std::uint32_t n_slots);

  VertexId root() const { return root_; }
  std::uint32_t n_slots() const {
    return static_cast<std::uint32_t>(parent_.size());
  }
  std::uint32_t size() const { return size_; }
  bool contains(VertexId v) const {
    return v < in_tree_.size() && in_tree_[v] != 0;
  }
  VertexId parent(VertexId v) const { return parent_[v]; }
  std::uint32_t level(VertexId v) const { return level_[v]; }
  const std::vector<VertexId>& children(VertexId v) const {
    return children_[v];
  }
  std::uint32_t height() const;

  // Adds a new vertex under an existing parent.
  void attach(VertexId child, VertexId parent);

  // Arena use: live components share one instance, each rooted by
  // seed_root at level 0. Single-root queries (is_ancestor, serialize,
  // validate) are off limits on such instances.
  void seed_root(VertexId v);

  // Drops a vertex and its child list wholesale; the caller must keep the
  // surrounding structure consistent (used when retiring committed
  // component slices from the arena).
  void clear_vertex(VertexId v);

  // Turns an existing vertex into a root at level 0 without editing the
  // old parent's child list (the old parent is about to be cleared).
  void make_root(VertexId v);

  // Structural edits for restructuring; the caller is responsible for
  // keeping levels consistent afterwards (see set_level).
  void set_parent(VertexId v, VertexId new_parent);
  void set_level(VertexId v, std::uint32_t lvl) {
    level_[v] = lvl;
    tours_valid_ = false;
  }

  // Reflexive ancestor test via Euler intervals, rebuilt lazily after
  // mutations. Cheap on settled trees, wrong tool inside restructuring
  // loops; use ancestor_related there.
  bool is_ancestor(VertexId a, VertexId d) const;

  // Parent-walk test (deeper vertex walks up). No caching, safe while
  // the tree is being edited as long as levels are consistent.
  bool ancestor_related(VertexId a, VertexId b) const;

  // Deepest root-to-leaf path, deepest vertex ties broken toward the
  // smallest id. Returns root..leaf.
  std::vector<VertexId> longest_root_path() const;

  // All vertices with level < k, ascending id.
  std::vector<VertexId> top_k_levels(std::uint32_t k) const;

  std::vector<VertexId> subtree_vertices(VertexId v) const;

  // One line per tree vertex, ascending id: "v parent level", with -1 as
  // the root's parent.
  std::string serialize() const;
  static DfsTree parse(std::string_view text);

 private:
  void rebuild_tours() const;

  VertexId root_;
  std::uint32_t size_ = 0;
  std::vector<VertexId> parent_;
  std::vector<std::uint32_t> level_;
  std::vector<std::vector<VertexId>> children_;
  std::vector<std::uint8_t> in_tree_;

  mutable std::vector<std::uint32_t> tin_, tout_;
  mutable bool tours_valid_ = false;
};

struct DfsValidation {
  bool valid = true;
  std::optional<Edge> first_violation;
};

// Checks the DFS property: every non-tree edge must connect an
// ancestor-descendant pair. Tree edges of `t` are accepted as-is.
DfsValidation validate_back_edges(const DfsTree& t, std::span<const Edge> edges);

// Full check against the augmented graph: `t` must span all of
// 0..n_original rooted at the dummy root (TreeError otherwise), and every
// augmented edge must be a tree or back edge.
DfsValidation validate_dfs(const GraphInput& g, const DfsTree& t);

// rep[x]: for vertices at local level <= k, x itself; deeper, the level-k
// ancestor (the root of x's hanging tree). Drives the one-sided skip test
// in the level-batched algorithms.
class RepIndex {
 public:
  explicit RepIndex(std::uint32_t n_slots) : rep_(n_slots, kNoVertex) {}

  VertexId get(VertexId v) const { return rep_[v]; }
  void set(VertexId v, VertexId r) { rep_[v] = r; }

  // Recomputes rep[v] from its parent's value; parents must be updated
  // before children.
  void assign_from_parent(const DfsTree& t, VertexId v, std::uint32_t k) {
    rep_[v] = t.level(v) <= k ? v : rep_[t.parent(v)];
  }

 private:
  std::vector<VertexId> rep_;
};

}  // namespace dfs_stream
