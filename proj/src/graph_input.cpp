#include "dfs_stream/graph_input.hpp"

#include <charconv>
#include <cstdio>
#include <unordered_map>

namespace dfs_stream {

namespace {

bool parse_u64(std::string_view tok, std::uint64_t& out) {
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return res.ec == std::errc() && res.ptr == tok.data() + tok.size();
}

}  // namespace

GraphInput ingest_edge_list(std::string_view text, std::string name) {
  GraphInput g;
  g.name = std::move(name);
  std::uint64_t max_id = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    };
    skip_ws();
    if (i == line.size()) continue;
    if (line[i] == '%' || line[i] == '#') continue;

    std::uint64_t ids[2];
    for (int t = 0; t < 2; ++t) {
      skip_ws();
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      if (start == i)
        throw ParseError("expected two vertex ids", line_no);
      if (!parse_u64(line.substr(start, i - start), ids[t]))
        throw ParseError("bad vertex token '" +
                             std::string(line.substr(start, i - start)) + "'",
                         line_no);
    }
    skip_ws();
    if (i != line.size())
      throw ParseError("trailing content after edge", line_no);
    if (ids[0] == 0 || ids[1] == 0)
      throw ParseError("vertex ids must be positive", line_no);
    if (ids[0] > 0xFFFFFFFFull || ids[1] > 0xFFFFFFFFull)
      throw ParseError("vertex id out of range", line_no);
    if (ids[0] > max_id) max_id = ids[0];
    if (ids[1] > max_id) max_id = ids[1];
    if (ids[0] == ids[1]) continue;  // self-loops carry no information here
    g.edges.push_back(Edge{static_cast<VertexId>(ids[0]),
                           static_cast<VertexId>(ids[1])});
  }
  g.n_original = static_cast<std::uint32_t>(max_id);
  return g;
}

GraphInput load_edge_list_file(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (f == nullptr) throw IoError("cannot open " + path);
  std::string text;
  char buf[1 << 16];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) text.append(buf, got);
  std::fclose(f);
  std::size_t slash = path.find_last_of('/');
  return ingest_edge_list(
      text, slash == std::string::npos ? path : path.substr(slash + 1));
}

std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

namespace {

// Unbiased draw from [0, range) by rejection: values below
// 2^64 mod range are discarded so the remainder splits evenly.
std::uint64_t bounded(std::uint64_t& state, std::uint64_t range) {
  std::uint64_t reject_below = (0 - range) % range;
  std::uint64_t x;
  do {
    x = splitmix64_next(state);
  } while (x < reject_below);
  return x % range;
}

// Pair index -> simple edge. Pairs are ordered (1,2),(1,3),..,(1,n),
// (2,3),.. so row u starts at offset (u-1)*n - u*(u+1)/2 shifted; found
// by binary search to stay overflow-safe.
Edge decode_pair(std::uint64_t idx, std::uint32_t n) {
  auto row_start = [n](std::uint64_t u) {  // pairs before row u, u in 1..n-1
    return (u - 1) * n - (u - 1) * u / 2;
  };
  std::uint64_t lo = 1, hi = n - 1;
  while (lo < hi) {  // largest u with row_start(u) <= idx
    std::uint64_t mid = (lo + hi + 1) / 2;
    if (row_start(mid) <= idx)
      lo = mid;
    else
      hi = mid - 1;
  }
  std::uint64_t u = lo;
  std::uint64_t v = u + 1 + (idx - row_start(u));
  return Edge{static_cast<VertexId>(u), static_cast<VertexId>(v)};
}

}  // namespace

GraphInput random_graph(std::uint32_t n, std::uint64_t m, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("random_graph needs n >= 1");
  std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (m > total)
    throw InvalidArgument("random_graph: m exceeds n*(n-1)/2");
  GraphInput g;
  g.n_original = n;
  g.name = "random(n=" + std::to_string(n) + ",m=" + std::to_string(m) +
           ",seed=" + std::to_string(seed) + ")";
  g.edges.reserve(m);

  // Lazy Fisher-Yates: draw position j in [i, total), emit whatever lives
  // there, then move slot i's occupant into j. Only displaced slots are kept.
  std::uint64_t state = seed;
  std::unordered_map<std::uint64_t, std::uint64_t> displaced;
  displaced.reserve(m * 2);
  for (std::uint64_t i = 0; i < m; ++i) {
    std::uint64_t j = i + bounded(state, total - i);
    auto jt = displaced.find(j);
    std::uint64_t pick = jt == displaced.end() ? j : jt->second;
    auto it = displaced.find(i);
    std::uint64_t at_i = it == displaced.end() ? i : it->second;
    displaced[j] = at_i;
    g.edges.push_back(decode_pair(pick, n));
  }
  return g;
}

}  // namespace dfs_stream
