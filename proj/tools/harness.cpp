#include "harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "dfs_stream.h"

namespace harness {

namespace {

struct Point {
  std::uint32_t n = 0;
  std::uint64_t m = 0;
  std::uint32_t k = 0;
};

struct Job {
  Point pt;
  std::string algo;
  std::uint64_t seed = 0;
};

struct RowData {
  std::uint64_t passes = 0;
  std::uint64_t peak = 0;
  std::uint32_t height = 0;
  std::uint64_t scanned = 0;
  double wall = 0.0;
  std::string error;
};

std::uint64_t derived_m(std::uint32_t n, double log_base) {
  double v = n * (std::log(static_cast<double>(n)) / std::log(log_base));
  return static_cast<std::uint64_t>(std::ceil(v));
}

std::vector<Point> sweep_points(const ExperimentSpec& s, std::string* err) {
  std::vector<Point> pts;
  if (s.axis == 'n') {
    for (std::uint32_t n = 100; n <= 1000; n += 100)
      pts.push_back({n, derived_m(n, s.log_base), s.fixed_k});
    return pts;
  }
  std::uint32_t n = s.fixed_n;
  if (n < 2) {
    *err = "sweep needs n >= 2";
    return {};
  }
  std::uint64_t m_full = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  std::uint64_t m_base = s.fixed_m != 0 ? s.fixed_m : derived_m(n, s.log_base);
  if (s.axis == 'm') {
    // 32 log-spaced points from n up to the complete graph.
    double lo = std::log(static_cast<double>(n));
    double hi = std::log(static_cast<double>(m_full));
    std::uint64_t prev = 0;
    for (int i = 0; i < 32; ++i) {
      double t = lo + (hi - lo) * (i / 31.0);
      auto m = static_cast<std::uint64_t>(std::llround(std::exp(t)));
      m = std::clamp<std::uint64_t>(m, n, m_full);
      if (m == prev) continue;
      prev = m;
      pts.push_back({n, m, s.fixed_k});
    }
    return pts;
  }
  if (s.axis == 'k') {
    // Fibonacci-spaced k values, with n itself as the last point.
    std::uint64_t a = 1, b = 2;
    while (a < n) {
      pts.push_back({n, m_base, static_cast<std::uint32_t>(a)});
      std::uint64_t next = a + b;
      a = b;
      b = next;
    }
    pts.push_back({n, m_base, n});
    return pts;
  }
  *err = std::string("unknown sweep axis: ") + s.axis;
  return {};
}

std::vector<std::string> default_algorithms(char axis) {
  if (axis == 'k') return {"kpath", "klev"};
  return {"simp", "imprv", "kpath", "klev"};
}

RowData run_job(const Job& job, double space_mult, bool enforce) {
  RowData row;
  dfss_graph* g = dfss_graph_random(job.pt.n, job.pt.m, job.seed);
  if (g == nullptr) {
    row.error = dfss_last_error();
    return row;
  }
  dfss_config cfg;
  dfss_config_init(&cfg);
  cfg.algo = job.algo.c_str();
  cfg.k = job.pt.k;
  cfg.space_mult = space_mult;
  cfg.enforce_budget = enforce ? 1 : 0;
  dfss_result* r = dfss_run(g, &cfg);
  if (r == nullptr) {
    row.error = dfss_last_error();
    dfss_graph_free(g);
    return row;
  }
  row.passes = dfss_result_passes(r);
  row.peak = dfss_result_peak_edges(r);
  row.height = dfss_result_height(r);
  row.scanned = dfss_result_edges_scanned(r);
  row.wall = dfss_result_wall_seconds(r);
  dfss_result_free(r);
  dfss_graph_free(g);
  return row;
}

std::string format_stat(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Mean and sample standard deviation of one column across trial rows.
struct Stat {
  double mean = 0.0;
  double stddev = 0.0;
};

Stat column_stat(const std::vector<double>& xs) {
  Stat st;
  if (xs.empty()) return st;
  double sum = 0.0;
  for (double x : xs) sum += x;
  st.mean = sum / xs.size();
  if (xs.size() > 1) {
    double acc = 0.0;
    for (double x : xs) acc += (x - st.mean) * (x - st.mean);
    st.stddev = std::sqrt(acc / (xs.size() - 1));
  }
  return st;
}

}  // namespace

const char* csv_header() {
  return "dataset,algorithm,k,passes,peak_stored_edges,tree_height,"
         "edges_scanned,seed,wall_time";
}

std::string csv_row(const std::string& dataset, const std::string& algo,
                    std::uint32_t k, std::uint64_t passes, std::uint64_t peak,
                    std::uint32_t height, std::uint64_t scanned,
                    const std::string& seed, double wall_seconds) {
  char wall[32];
  std::snprintf(wall, sizeof wall, "%.6f", wall_seconds);
  std::ostringstream os;
  os << dataset << ',' << algo << ',' << k << ',' << passes << ',' << peak
     << ',' << height << ',' << scanned << ',' << seed << ',' << wall;
  return os.str();
}

std::string gnm_name(std::uint32_t n, std::uint64_t m) {
  std::ostringstream os;
  os << "gnm_n" << n << "_m" << m;
  return os.str();
}

int run_experiment(const ExperimentSpec& spec, std::ostream& out,
                   std::string* err) {
  std::string local_err;
  if (err == nullptr) err = &local_err;
  if (spec.trials < 1) {
    *err = "trials must be >= 1";
    return 1;
  }
  std::vector<Point> pts = sweep_points(spec, err);
  if (pts.empty()) return 1;
  std::vector<std::string> algos =
      spec.algorithms.empty() ? default_algorithms(spec.axis)
                              : spec.algorithms;

  std::vector<Job> jobs;
  for (const Point& pt : pts)
    for (const std::string& algo : algos)
      for (std::uint32_t t = 0; t < spec.trials; ++t)
        jobs.push_back({pt, algo, spec.base_seed + t});

  std::vector<RowData> rows(jobs.size());
  unsigned want = spec.jobs != 0 ? spec.jobs
                                 : std::max(1u, std::thread::hardware_concurrency());
  unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(want, jobs.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      rows[i] = run_job(jobs[i], spec.space_mult, spec.enforce_budget);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& th : pool) th.join();
  }

  for (const RowData& row : rows)
    if (!row.error.empty()) {
      *err = row.error;
      return 1;
    }

  // Emit in spec order: trials of one (point, algorithm) group, then its
  // summary rows.
  out << csv_header() << '\n';
  std::size_t idx = 0;
  for (const Point& pt : pts) {
    std::string dataset = gnm_name(pt.n, pt.m);
    for (const std::string& algo : algos) {
      std::vector<double> passes, peak, height, scanned, wall;
      for (std::uint32_t t = 0; t < spec.trials; ++t, ++idx) {
        const RowData& row = rows[idx];
        out << csv_row(dataset, algo, pt.k, row.passes, row.peak, row.height,
                       row.scanned, std::to_string(spec.base_seed + t),
                       row.wall)
            << '\n';
        passes.push_back(static_cast<double>(row.passes));
        peak.push_back(static_cast<double>(row.peak));
        height.push_back(static_cast<double>(row.height));
        scanned.push_back(static_cast<double>(row.scanned));
        wall.push_back(row.wall);
      }
      Stat sp = column_stat(passes), sk = column_stat(peak),
           sh = column_stat(height), ss = column_stat(scanned),
           sw = column_stat(wall);
      out << dataset << ',' << algo << ',' << pt.k << ',' << format_stat(sp.mean)
          << ',' << format_stat(sk.mean) << ',' << format_stat(sh.mean) << ','
          << format_stat(ss.mean) << ",mean,";
      {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", sw.mean);
        out << buf << '\n';
      }
      out << dataset << ',' << algo << ',' << pt.k << ','
          << format_stat(sp.stddev) << ',' << format_stat(sk.stddev) << ','
          << format_stat(sh.stddev) << ',' << format_stat(ss.stddev)
          << ",stddev,";
      {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", sw.stddev);
        out << buf << '\n';
      }
    }
  }
  return 0;
}

}  // namespace harness
