#pragma once

// Benchmark harness: strategy dispatch, worker sweeps, speedup/efficiency
// arithmetic, and the CSV report.

#include <cstdint>
#include <string>
#include <vector>

#include "hydro/grid.hpp"
#include "hydro/types.hpp"

namespace hydro {

struct RunConfig {
  std::string case_name = "blast";     // blast | sod | uniform
  int nx = 2048;
  int ny = 2048;
  int steps = 10;
  std::string strategy = "sequential"; // sequential | fine_grain |
                                       // coarse_grain | task_graph
  std::vector<int> workers = {1};
  int p_rows = 0;  // 0 = derive a near-square decomposition from workers
  int p_cols = 0;
  double gamma = 1.4;
  double cfl = 0.8;
  std::string policy = "fifo";
  std::uint64_t seed = 0;
  std::string output;                  // CSV path; empty = stdout only
  int timeout_ms = 30000;
};

struct BenchRecord {
  int workers;
  double time_s;
  double speedup;     // T(1) / T(w), from unrounded times
  double efficiency;  // speedup / w, as a fraction (printed as percent)
  std::uint64_t checksum;
};

// Near-square decomposition with p_rows >= p_cols (8 -> 4x2, 4 -> 2x2).
std::pair<int, int> auto_decompose(int workers);

// Builds the configured case and grid.
Grid2D make_case(const RunConfig& config);

// Advances `grid` with the configured strategy and worker count.
void run_strategy(Grid2D& grid, const RunConfig& config, int workers);

// For each worker count: untimed warm-up, then a timed run from the same
// initial data; rows whose checksums disagree are a hard failure.  The
// workers list must contain 1, since speedups are relative to the measured
// one-worker time.
std::vector<BenchRecord> run_benchmark(const RunConfig& config);

// Fig-style arithmetic on already-measured times (exposed for testing the
// report path without timing anything).
std::vector<BenchRecord> make_records(const std::vector<int>& workers,
                                      const std::vector<double>& times,
                                      std::uint64_t checksum);

// CSV: workers,time_s,speedup,efficiency,checksum with times and speedups
// to 0.01 and efficiency to 0.01%.
std::string render_csv(const std::vector<BenchRecord>& records);
std::vector<BenchRecord> parse_csv(const std::string& text);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace hydro
