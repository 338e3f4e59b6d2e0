#pragma once

#include <functional>
#include <optional>
#include <string_view>

#include "dfs_stream/dfs_tree.hpp"
#include "dfs_stream/edge_stream.hpp"
#include "dfs_stream/types.hpp"

namespace dfs_stream {

// simpo  one vertex per pass, chosen at pass end
// simp   simpo plus greedy mid-pass extension of the current tip
// imprv  one tree level per pass
// kpath  buffers up to n*k edges, peels the deepest path per pass
// klevo  commits k levels per pass
// klev   klevo plus early commits of vertices whose chains went untouched
enum class Algorithm { simpo, simp, imprv, kpath, klevo, klev };

std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> algorithm_from_name(std::string_view name);

inline constexpr std::uint32_t kNoLevel = 0xFFFFFFFFu;

// Handed to the pass-end hook. provisional_level[v] is the global level a
// still-uncommitted vertex would get if its component were committed as it
// stands (kNoLevel when the algorithm keeps no such estimate).
struct PassContext {
  std::uint64_t pass_index;
  const DfsTree& tree;
  const std::vector<std::uint8_t>& visited;
  const std::vector<std::uint32_t>& provisional_level;
};

struct AlgoConfig {
  Algorithm algo = Algorithm::simp;
  std::uint32_t k = 1;
  // scales the per-algorithm default edge budget
  double space_mult = 1.0;
  bool enforce_budget = true;
  std::function<void(const PassContext&)> on_pass_end;
};

struct RunDebug {
  std::uint64_t components_seen = 0;
  std::uint64_t path_extractions = 0;
  std::uint32_t min_extracted_path = 0;  // vertices; 0 if none extracted
  std::uint64_t reversals = 0;
  std::uint64_t early_commits = 0;  // vertices settled below the top slice
};

struct RunResult {
  DfsTree tree;
  PassStats stats;
  RunDebug debug;
};

// simpo, simp: n;  imprv: 2n;  kpath: n(k+1);  klevo, klev: 4nk
// (n is the augmented vertex count).
std::uint64_t default_edge_budget(Algorithm a, std::uint32_t n_augmented,
                                  std::uint32_t k);

RunResult run_simp_o(EdgeStream& stream, const AlgoConfig& cfg = {});
RunResult run_simp(EdgeStream& stream, const AlgoConfig& cfg = {});
RunResult run_imprv(EdgeStream& stream, const AlgoConfig& cfg = {});
RunResult run_k_path(EdgeStream& stream, const AlgoConfig& cfg);
RunResult run_k_lev(EdgeStream& stream, const AlgoConfig& cfg);

RunResult run_algorithm(EdgeStream& stream, const AlgoConfig& cfg);

}  // namespace dfs_stream
