#pragma once

#include <cstdint>
#include <string>

#include "dfs_stream/types.hpp"

namespace dfs_stream {

// Counts stored edges against a per-run budget. Only edge-sized state is
// charged; O(1)-per-vertex bookkeeping (parent pointers, levels, union-find
// cells) is not. Charges may go negative transiently only as a bug, so the
// meter rejects underflow too.
class SpaceMeter {
 public:
  SpaceMeter(std::uint64_t budget, bool enforce)
      : budget_(budget), enforce_(enforce) {}

  // `site` names the charging call-site for diagnostics.
  void charge(std::int64_t delta, const char* site) {
    if (delta < 0 && current_ < static_cast<std::uint64_t>(-delta))
      throw std::logic_error(std::string("edge charge underflow at ") + site);
    current_ = static_cast<std::uint64_t>(
        static_cast<std::int64_t>(current_) + delta);
    if (current_ > peak_) peak_ = current_;
    if (enforce_ && current_ > budget_)
      throw BudgetError("edge budget exceeded at " + std::string(site) + ": " +
                        std::to_string(current_) + " > " +
                        std::to_string(budget_));
  }

  std::uint64_t current() const { return current_; }
  std::uint64_t peak() const { return peak_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
  std::uint64_t current_ = 0;
  std::uint64_t peak_ = 0;
  bool enforce_;
};

}  // namespace dfs_stream
