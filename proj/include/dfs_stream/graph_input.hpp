#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dfs_stream/types.hpp"

namespace dfs_stream {

// A loaded graph before augmentation. Vertices are 1..n_original; edge
// multiplicity and order are preserved exactly as ingested, self-loops
// are dropped at ingest.
struct GraphInput {
  std::uint32_t n_original = 0;
  std::vector<Edge> edges;
  std::string name;

  std::uint32_t n_augmented() const { return n_original + 1; }
  std::uint64_t m_original() const { return edges.size(); }
};

// Parses whitespace-separated edge lists. Lines starting with '%' or '#'
// are comments; every other non-blank line must hold exactly two positive
// integer vertex ids. n is the largest id seen. Malformed lines raise
// ParseError with a 1-based line number.
GraphInput ingest_edge_list(std::string_view text, std::string name = "");

GraphInput load_edge_list_file(const std::string& path);

// Uniform G(n, m): the first m edges of a seeded random permutation of all
// n(n-1)/2 simple edges, via a sparse Fisher-Yates over splitmix64. Fully
// reproducible across platforms for a fixed (n, m, seed).
GraphInput random_graph(std::uint32_t n, std::uint64_t m, std::uint64_t seed);

// splitmix64 step, exposed for tests and seed derivation in the harness.
std::uint64_t splitmix64_next(std::uint64_t& state);

}  // namespace dfs_stream
