#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "harness.hpp"

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) out.push_back(field);
  return out;
}

// the wall_time column is the only legitimately nondeterministic field
std::string drop_wall(const std::string& csv) {
  std::string out;
  for (const std::string& line : split_lines(csv)) {
    out.append(line, 0, line.find_last_of(','));
    out.push_back('\n');
  }
  return out;
}

}  // namespace

TEST_CASE("csv primitives") {
  CHECK(std::string(harness::csv_header()) ==
        "dataset,algorithm,k,passes,peak_stored_edges,tree_height,"
        "edges_scanned,seed,wall_time");
  CHECK(harness::gnm_name(10, 20) == "gnm_n10_m20");
  CHECK(harness::csv_row("gnm_n10_m20", "simp", 3, 5, 9, 4, 100, "7",
                         0.1234567) ==
        "gnm_n10_m20,simp,3,5,9,4,100,7,0.123457");
}

TEST_CASE("experiment sweep layout, summaries and parallel determinism") {
  harness::ExperimentSpec spec;
  spec.axis = 'k';
  spec.fixed_n = 60;
  spec.fixed_m = 0;  // derive from n
  spec.trials = 3;
  spec.base_seed = 5;
  spec.jobs = 1;

  std::ostringstream serial;
  std::string err;
  REQUIRE(harness::run_experiment(spec, serial, &err) == 0);
  CHECK(err.empty());

  spec.jobs = 4;
  std::ostringstream parallel;
  REQUIRE(harness::run_experiment(spec, parallel, &err) == 0);
  CHECK(drop_wall(serial.str()) == drop_wall(parallel.str()));

  auto lines = split_lines(serial.str());
  // k sweeps Fibonacci values below n plus n itself: 1,2,3,5,8,13,21,34,55,60
  std::vector<std::uint32_t> want_k{1, 2, 3, 5, 8, 13, 21, 34, 55, 60};
  // per (point, algorithm): trials rows then mean and stddev
  std::size_t group = spec.trials + 2;
  REQUIRE(lines.size() == 1 + want_k.size() * 2 * group);
  CHECK(lines[0] == harness::csv_header());

  std::size_t at = 1;
  for (std::uint32_t k : want_k) {
    for (const std::string& algo : {std::string("kpath"), std::string("klev")}) {
      std::vector<double> passes;
      for (std::uint32_t t = 0; t < spec.trials; ++t, ++at) {
        auto f = split_fields(lines[at]);
        REQUIRE(f.size() == 9);
        // m defaults to ceil(n * ln n): 60 * 4.0943.. rounds up to 246
        CHECK(f[0] == "gnm_n60_m246");
        CHECK(f[1] == algo);
        CHECK(f[2] == std::to_string(k));
        CHECK(f[7] == std::to_string(spec.base_seed + t));
        passes.push_back(std::stod(f[3]));
      }
      auto mean_f = split_fields(lines[at++]);
      auto sd_f = split_fields(lines[at++]);
      CHECK(mean_f[7] == "mean");
      CHECK(sd_f[7] == "stddev");
      double mean = 0;
      for (double p : passes) mean += p;
      mean /= passes.size();
      double var = 0;
      for (double p : passes) var += (p - mean) * (p - mean);
      double sd = std::sqrt(var / (passes.size() - 1));
      CHECK(std::stod(mean_f[3]) == doctest::Approx(mean).epsilon(1e-5));
      CHECK(std::stod(sd_f[3]) == doctest::Approx(sd).epsilon(1e-4));
    }
  }
}

TEST_CASE("experiment error reporting") {
  harness::ExperimentSpec spec;
  std::ostringstream out;
  std::string err;

  spec.axis = 'z';
  CHECK(harness::run_experiment(spec, out, &err) != 0);
  CHECK(err.find("axis") != std::string::npos);

  spec = {};
  spec.trials = 0;
  CHECK(harness::run_experiment(spec, out, &err) != 0);
  CHECK(err.find("trials") != std::string::npos);

  spec = {};
  spec.axis = 'k';
  spec.fixed_n = 1;
  CHECK(harness::run_experiment(spec, out, &err) != 0);

  spec = {};
  spec.axis = 'k';
  spec.fixed_n = 30;
  spec.trials = 1;
  spec.algorithms = {"nosuch"};
  CHECK(harness::run_experiment(spec, out, &err) != 0);
  CHECK(err.find("nosuch") != std::string::npos);
}
