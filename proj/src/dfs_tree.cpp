#include "dfs_stream/dfs_tree.hpp"

#include <algorithm>
#include <charconv>

namespace dfs_stream {

DfsTree::DfsTree(std::uint32_t n_slots, VertexId root)
    : root_(root),
      parent_(n_slots, kNoVertex),
      level_(n_slots, 0),
      children_(n_slots),
      in_tree_(n_slots, 0) {
  DFS_CHECK(root < n_slots, "tree root out of range");
  in_tree_[root] = 1;
  size_ = 1;
}

DfsTree::DfsTree(std::uint32_t n_slots)
    : root_(kNoVertex),
      parent_(n_slots, kNoVertex),
      level_(n_slots, 0),
      children_(n_slots),
      in_tree_(n_slots, 0) {}

std::uint32_t DfsTree::height() const {
  std::uint32_t h = 0;
  for (VertexId v = 0; v < n_slots(); ++v)
    if (in_tree_[v] && level_[v] > h) h = level_[v];
  return h;
}

void DfsTree::attach(VertexId child, VertexId parent) {
  DFS_CHECK(child < n_slots() && !in_tree_[child], "attach: bad child");
  DFS_CHECK(parent < n_slots() && in_tree_[parent], "attach: bad parent");
  in_tree_[child] = 1;
  parent_[child] = parent;
  level_[child] = level_[parent] + 1;
  children_[parent].push_back(child);
  ++size_;
  tours_valid_ = false;
}

void DfsTree::seed_root(VertexId v) {
  DFS_CHECK(v < n_slots() && !in_tree_[v], "seed_root: bad vertex");
  in_tree_[v] = 1;
  parent_[v] = kNoVertex;
  level_[v] = 0;
  ++size_;
  tours_valid_ = false;
}

void DfsTree::clear_vertex(VertexId v) {
  DFS_CHECK(v < n_slots() && in_tree_[v], "clear_vertex: bad vertex");
  in_tree_[v] = 0;
  parent_[v] = kNoVertex;
  level_[v] = 0;
  children_[v].clear();
  --size_;
  tours_valid_ = false;
}

void DfsTree::make_root(VertexId v) {
  DFS_CHECK(v < n_slots() && in_tree_[v], "make_root: bad vertex");
  parent_[v] = kNoVertex;
  level_[v] = 0;
  tours_valid_ = false;
}

void DfsTree::set_parent(VertexId v, VertexId new_parent) {
  DFS_CHECK(in_tree_[v] && parent_[v] != kNoVertex, "set_parent: bad vertex");
  DFS_CHECK(in_tree_[new_parent], "set_parent: bad parent");
  auto& sibs = children_[parent_[v]];
  sibs.erase(std::find(sibs.begin(), sibs.end(), v));
  parent_[v] = new_parent;
  children_[new_parent].push_back(v);
  tours_valid_ = false;
}

void DfsTree::rebuild_tours() const {
  DFS_CHECK(root_ != kNoVertex, "interval ancestry needs a single-root tree");
  tin_.assign(n_slots(), 0);
  tout_.assign(n_slots(), 0);
  std::uint32_t clock = 0;
  // children visited in list order; [tin, tout] nests exactly on subtrees
  std::vector<std::pair<VertexId, std::size_t>> stack;
  stack.emplace_back(root_, 0);
  tin_[root_] = clock++;
  while (!stack.empty()) {
    auto& [v, next_child] = stack.back();
    if (next_child < children_[v].size()) {
      VertexId c = children_[v][next_child++];
      tin_[c] = clock++;
      stack.emplace_back(c, 0);
    } else {
      tout_[v] = clock++;
      stack.pop_back();
    }
  }
  DFS_CHECK(clock == 2u * size_, "interval ancestry on a multi-root arena");
  tours_valid_ = true;
}

bool DfsTree::is_ancestor(VertexId a, VertexId d) const {
  DFS_CHECK(contains(a) && contains(d), "is_ancestor: vertex not in tree");
  if (!tours_valid_) rebuild_tours();
  return tin_[a] <= tin_[d] && tout_[d] <= tout_[a];
}

bool DfsTree::ancestor_related(VertexId a, VertexId b) const {
  DFS_CHECK(contains(a) && contains(b), "ancestor_related: vertex not in tree");
  if (level_[a] < level_[b]) std::swap(a, b);
  while (level_[a] > level_[b]) a = parent_[a];
  return a == b;
}

std::vector<VertexId> DfsTree::longest_root_path() const {
  VertexId best = root_;
  for (VertexId v = 0; v < n_slots(); ++v) {
    if (!in_tree_[v]) continue;
    if (level_[v] > level_[best] || (level_[v] == level_[best] && v < best))
      best = v;
  }
  std::vector<VertexId> path;
  for (VertexId v = best;; v = parent_[v]) {
    path.push_back(v);
    if (v == root_) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<VertexId> DfsTree::top_k_levels(std::uint32_t k) const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n_slots(); ++v)
    if (in_tree_[v] && level_[v] < k) out.push_back(v);
  return out;
}

std::vector<VertexId> DfsTree::subtree_vertices(VertexId v) const {
  DFS_CHECK(contains(v), "subtree_vertices: vertex not in tree");
  std::vector<VertexId> out{v};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (VertexId c : children_[out[i]]) out.push_back(c);
  return out;
}

std::string DfsTree::serialize() const {
  std::string out;
  for (VertexId v = 0; v < n_slots(); ++v) {
    if (!in_tree_[v]) continue;
    out += std::to_string(v);
    out += ' ';
    out += v == root_ ? "-1" : std::to_string(parent_[v]);
    out += ' ';
    out += std::to_string(level_[v]);
    out += '\n';
  }
  return out;
}

DfsTree DfsTree::parse(std::string_view text) {
  struct Row {
    VertexId v;
    std::int64_t parent;
    std::uint32_t level;
  };
  std::vector<Row> rows;
  std::size_t line_no = 0, pos = 0;
  VertexId max_id = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    bool blank = true;
    for (char c : line)
      if (c != ' ' && c != '\t') blank = false;
    if (blank) continue;

    std::int64_t nums[3];
    std::size_t i = 0;
    for (int t = 0; t < 3; ++t) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      auto res = std::from_chars(line.data() + start, line.data() + i, nums[t]);
      if (start == i || res.ec != std::errc() || res.ptr != line.data() + i)
        throw ParseError("tree line needs 'v parent level'", line_no);
    }
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i != line.size()) throw ParseError("trailing content", line_no);
    if (nums[0] < 0 || nums[1] < -1 || nums[2] < 0)
      throw ParseError("negative field", line_no);
    rows.push_back(Row{static_cast<VertexId>(nums[0]), nums[1],
                       static_cast<std::uint32_t>(nums[2])});
    max_id = std::max(max_id, rows.back().v);
  }
  if (rows.empty()) throw TreeError("empty tree");

  VertexId root = kNoVertex;
  for (const Row& r : rows) {
    if (r.parent == -1) {
      if (root != kNoVertex) throw TreeError("multiple roots");
      if (r.level != 0) throw TreeError("root must be at level 0");
      root = r.v;
    }
  }
  if (root == kNoVertex) throw TreeError("no root row");

  DfsTree t(max_id + 1, root);
  std::vector<std::uint8_t> seen(max_id + 1, 0);
  seen[root] = 1;
  // attach in level order so parents exist before children
  std::stable_sort(rows.begin(), rows.end(),
                   [](const Row& a, const Row& b) { return a.level < b.level; });
  for (const Row& r : rows) {
    if (r.parent == -1) continue;
    if (seen[r.v]) throw TreeError("duplicate vertex row");
    seen[r.v] = 1;
    VertexId p = static_cast<VertexId>(r.parent);
    if (p > max_id || !t.contains(p)) throw TreeError("parent not in tree");
    if (r.level != t.level(p) + 1) throw TreeError("level mismatch");
    t.attach(r.v, p);
  }
  return t;
}

DfsValidation validate_back_edges(const DfsTree& t,
                                  std::span<const Edge> edges) {
  for (const Edge& e : edges) {
    if (e.u == e.v) continue;
    if (!t.contains(e.u) || !t.contains(e.v))
      throw TreeError("edge endpoint missing from tree");
    if (t.parent(e.u) == e.v || t.parent(e.v) == e.u) continue;
    if (!t.is_ancestor(e.u, e.v) && !t.is_ancestor(e.v, e.u))
      return DfsValidation{false, e};
  }
  return DfsValidation{};
}

DfsValidation validate_dfs(const GraphInput& g, const DfsTree& t) {
  if (t.root() != kDummyRoot) throw TreeError("tree not rooted at 0");
  if (t.n_slots() < g.n_augmented()) throw TreeError("tree misses vertices");
  for (VertexId v = 0; v < g.n_augmented(); ++v)
    if (!t.contains(v)) throw TreeError("tree not spanning");
  if (t.size() != g.n_augmented()) throw TreeError("tree has extra vertices");

  // Dummy-root edges are tree or back edges by construction: the root is
  // an ancestor of everything. Only the original edges need checking.
  return validate_back_edges(t, g.edges);
}

}  // namespace dfs_stream
