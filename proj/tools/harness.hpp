// Experiment runner: sweeps over n, m, or k on random graphs, emitting one
// CSV row per (point, algorithm, trial) plus mean/stddev summary rows.
// Built on the public C interface only.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace harness {

struct ExperimentSpec {
  char axis = 'n';        // 'n', 'm', or 'k'
  std::uint32_t fixed_n = 1000;
  std::uint64_t fixed_m = 0;  // 0: ceil(n * log(n)), log in log_base
  std::uint32_t fixed_k = 10;
  double log_base = 2.718281828459045;  // natural log by default
  std::vector<std::string> algorithms;  // empty: default set for the axis
  std::uint32_t trials = 10;
  std::uint64_t base_seed = 1;
  double space_mult = 1.0;
  bool enforce_budget = true;
  unsigned jobs = 0;  // 0: all hardware threads
};

// CSV header shared by cmd_run and experiments, wall_time last.
const char* csv_header();

// One finished run as a CSV row. The seed field doubles as the row kind
// for summary rows ("mean", "stddev").
std::string csv_row(const std::string& dataset, const std::string& algo,
                    std::uint32_t k, std::uint64_t passes, std::uint64_t peak,
                    std::uint32_t height, std::uint64_t scanned,
                    const std::string& seed, double wall_seconds);

// Dataset token for a random graph, usable as a CSV field.
std::string gnm_name(std::uint32_t n, std::uint64_t m);

// Runs the sweep; rows appear in spec order regardless of worker timing.
// Returns 0 on success; on failure writes a message to err and returns
// nonzero.
int run_experiment(const ExperimentSpec& spec, std::ostream& out,
                   std::string* err);

}  // namespace harness
