#include "dfs_stream/dsu.hpp"

#include <algorithm>

namespace dfs_stream {

ComponentSplit components_and_spanning_forest(std::span<const Edge> edges,
                                              std::span<const VertexId> active,
                                              std::uint32_t n_slots) {
  Dsu dsu(n_slots);
  for (VertexId v : active) dsu.activate(v);

  ComponentSplit out;
  out.members.assign(active.begin(), active.end());
  std::sort(out.members.begin(), out.members.end());
  for (const Edge& e : edges) {
    if (!dsu.active(e.u) || !dsu.active(e.v)) continue;
    if (dsu.unite(e.u, e.v)) out.forest.push_back(e);
  }
  out.label.reserve(out.members.size());
  for (VertexId v : out.members) out.label.push_back(dsu.find(v));
  return out;
}

}  // namespace dfs_stream
