#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dfs_stream {

// Dense vertex index. Id 0 is reserved for the dummy root that every
// original vertex is connected to; original vertices are 1..n.
using VertexId = std::uint32_t;

inline constexpr VertexId kDummyRoot = 0;
inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

// Undirected edge, stored as an ordered pair for stream purposes only.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, std::size_t line)
      : std::runtime_error(std::move(msg)), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class InvalidArgument : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a run stores more edges than its budget allows. This is a
// bug detector, not a recoverable condition.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or non-spanning tree input, kept distinct from "tree is not
// a DFS tree" results.
class TreeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal invariant check that stays on in release builds.
#define DFS_CHECK(cond, msg)                               \
  do {                                                     \
    if (!(cond)) throw std::logic_error(std::string(msg)); \
  } while (0)

// Instrumentation verbosity, from the DFS_STREAM_LOG environment
// variable: off (default), stats (one line per run), trace (per pass).
enum class LogLevel { off = 0, stats = 1, trace = 2 };

LogLevel log_level();
void log_line(LogLevel at_least, const std::string& line);

}  // namespace dfs_stream
