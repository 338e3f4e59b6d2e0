#pragma once

#include "dfs_stream/graph_input.hpp"
#include "dfs_stream/types.hpp"

namespace dfs_stream {

// Sequential view of the augmented stream: first the dummy-root edges
// (0,1),(0,2),..,(0,n) in ascending order, then the original edges in
// input order. Dummy edges are synthesized on the fly, never stored.
// Access is strictly forward; reset() rewinds and the pass counter
// advances once per scan (full or partial) that actually reads an edge.
class EdgeStream {
 public:
  explicit EdgeStream(const GraphInput& g) : g_(&g) {}

  void reset() {
    cursor_ = 0;
    pass_pending_ = true;
  }

  bool next(Edge& out) {
    std::uint64_t n = g_->n_original;
    if (cursor_ >= n + g_->edges.size()) return false;
    if (pass_pending_) {
      ++passes_;
      pass_pending_ = false;
    }
    if (cursor_ < n) {
      out = Edge{kDummyRoot, static_cast<VertexId>(cursor_ + 1)};
    } else {
      out = g_->edges[cursor_ - n];
    }
    ++cursor_;
    ++edges_scanned_;
    return true;
  }

  const GraphInput& graph() const { return *g_; }
  std::uint32_t n_augmented() const { return g_->n_augmented(); }
  std::uint64_t m_augmented() const {
    return g_->edges.size() + g_->n_original;
  }
  std::uint64_t passes() const { return passes_; }
  std::uint64_t edges_scanned() const { return edges_scanned_; }

 private:
  const GraphInput* g_;
  std::uint64_t cursor_ = 0;
  std::uint64_t passes_ = 0;
  std::uint64_t edges_scanned_ = 0;
  bool pass_pending_ = true;
};

// Per-run accounting reported by every algorithm.
struct PassStats {
  std::uint64_t passes = 0;
  std::uint64_t edges_scanned = 0;
  std::uint64_t peak_stored_edges = 0;
  std::uint32_t tree_height = 0;
  double wall_seconds = 0.0;
};

}  // namespace dfs_stream
