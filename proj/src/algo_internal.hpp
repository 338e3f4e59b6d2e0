#pragma once

#include <chrono>
#include <vector>

#include "dfs_stream/algorithms.hpp"
#include "dfs_stream/dsu.hpp"
#include "dfs_stream/edge_stream.hpp"
#include "dfs_stream/space_meter.hpp"

namespace dfs_stream::detail {

// State common to every runner: the committed tree, visitation flags and
// the meter. Pass/scan counts are deltas against the stream's state at
// construction so streams may be reused across runs.
struct RunFrame {
  EdgeStream& stream;
  const AlgoConfig& cfg;
  std::uint32_t n_aug;
  SpaceMeter meter;
  DfsTree tree;
  std::vector<std::uint8_t> visited;
  std::uint32_t visited_count = 1;
  std::vector<std::uint32_t> provisional;
  std::uint64_t base_passes, base_scanned;
  std::chrono::steady_clock::time_point t0;

  RunFrame(EdgeStream& s, const AlgoConfig& c)
      : stream(s),
        cfg(c),
        n_aug(s.n_augmented()),
        meter(scaled_budget(c, n_aug), c.enforce_budget),
        tree(n_aug, kDummyRoot),
        visited(n_aug, 0),
        provisional(n_aug, kNoLevel),
        base_passes(s.passes()),
        base_scanned(s.edges_scanned()),
        t0(std::chrono::steady_clock::now()) {
    visited[kDummyRoot] = 1;
  }

  static std::uint64_t scaled_budget(const AlgoConfig& c, std::uint32_t n_aug) {
    double b = c.space_mult *
               static_cast<double>(default_edge_budget(c.algo, n_aug, c.k));
    return b < 1.0 ? 1 : static_cast<std::uint64_t>(b + 0.5);
  }

  void commit(VertexId v, VertexId parent) {
    tree.attach(v, parent);
    visited[v] = 1;
    ++visited_count;
  }

  bool done() const { return visited_count == n_aug; }

  std::uint64_t passes() const { return stream.passes() - base_passes; }

  void fire_pass_hook() {
    if (cfg.on_pass_end)
      cfg.on_pass_end(PassContext{passes(), tree, visited, provisional});
  }

  RunResult finish(RunDebug debug);
};

struct CompSeed {
  VertexId root;  // minimum id of the component
  std::vector<VertexId> members_bfs;  // root first, parents before children
  std::vector<Edge> tree_edges;       // (parent, child), BFS order
};

// One full scan: unions the endpoints of every original edge and orients
// each class's spanning tree from its minimum id. Recorded tree edges are
// charged one each at "pass0.forest"; the caller owns that charge.
// Components come back in ascending root order.
std::vector<CompSeed> spanning_pass(EdgeStream& stream, SpaceMeter& meter);

}  // namespace dfs_stream::detail
