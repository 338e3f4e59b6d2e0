#include <cstdlib>
#include <cstring>
#include <iostream>
#include <mutex>

#include "dfs_stream/types.hpp"

namespace dfs_stream {

LogLevel log_level() {
  static LogLevel level = [] {
    const char* env = std::getenv("DFS_STREAM_LOG");
    if (env == nullptr || std::strcmp(env, "off") == 0 || *env == '\0')
      return LogLevel::off;
    if (std::strcmp(env, "stats") == 0) return LogLevel::stats;
    if (std::strcmp(env, "trace") == 0) return LogLevel::trace;
    return LogLevel::off;
  }();
  return level;
}

void log_line(LogLevel at_least, const std::string& line) {
  if (log_level() < at_least) return;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::cerr << line << '\n';
}

}  // namespace dfs_stream
