#include "hydro/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <tuple>

#include "hydro/audit.hpp"
#include "hydro/cases.hpp"
#include "hydro/errors.hpp"
#include "hydro/schedulers.hpp"

namespace hydro {

std::pair<int, int> auto_decompose(int workers) {
  if (workers < 1) throw ConfigError("worker count must be >= 1");
  int p_cols = static_cast<int>(std::sqrt(static_cast<double>(workers)));
  while (p_cols > 1 && workers % p_cols != 0) --p_cols;
  return {workers / p_cols, p_cols};
}

Grid2D make_case(const RunConfig& config) {
  const GasModel model{config.gamma, config.cfl};
  if (config.case_name == "blast") {
    return init_point_explosion(config.nx, config.ny, model);
  }
  if (config.case_name == "sod") {
    return init_sod(config.ny, model);
  }
  if (config.case_name == "uniform") {
    return init_uniform(config.nx, config.ny, {1.0, 0.0, 0.0, 1.0}, model);
  }
  throw ConfigError("unknown case '" + config.case_name +
                    "' (expected blast, sod, or uniform)");
}

namespace {

DomainDecomposition decomposition_for(const RunConfig& config,
                                      const Grid2D& grid, int workers) {
  int p_rows = config.p_rows;
  int p_cols = config.p_cols;
  if (p_rows <= 0 || p_cols <= 0) {
    std::tie(p_rows, p_cols) = auto_decompose(workers);
  }
  return decompose(grid.nx(), grid.ny(), p_rows, p_cols);
}

}  // namespace

void run_strategy(Grid2D& grid, const RunConfig& config, int workers) {
  const GasModel model{config.gamma, config.cfl};
  if (config.strategy == "sequential") {
    if (workers != 1) {
      throw ConfigError("strategy sequential runs with exactly 1 worker");
    }
    run_sequential(grid, model, config.steps);
    return;
  }
  if (config.strategy == "fine_grain") {
    run_fine_grain(grid, model, config.steps, workers);
    return;
  }
  if (config.strategy == "coarse_grain") {
    const DomainDecomposition decomp = decomposition_for(config, grid, workers);
    if (decomp.count() != workers) {
      throw ConfigError("coarse_grain needs one worker per subdomain: " +
                        std::to_string(decomp.p_rows()) + "x" +
                        std::to_string(decomp.p_cols()) + " != " +
                        std::to_string(workers) + " workers");
    }
    CoarseOptions options;
    options.wait_timeout = std::chrono::milliseconds(config.timeout_ms);
    run_coarse_grain(grid, model, config.steps, decomp, options);
    return;
  }
  if (config.strategy == "task_graph") {
    const DomainDecomposition decomp = decomposition_for(config, grid, workers);
    TaskOptions options;
    options.policy = parse_policy(config.policy);
    options.seed = config.seed;
    run_task_graph(grid, model, config.steps, decomp, workers, options);
    return;
  }
  throw ConfigError("unknown strategy '" + config.strategy +
                    "' (expected sequential, fine_grain, coarse_grain, or "
                    "task_graph)");
}

std::vector<BenchRecord> run_benchmark(const RunConfig& config) {
  bool has_one = false;
  for (int w : config.workers) has_one = has_one || (w == 1);
  if (!has_one) {
    throw ConfigError(
        "the workers list must include 1: speedups are measured against the "
        "1-worker time of the same strategy");
  }

  const Grid2D initial = make_case(config);

  struct Timing {
    int workers;
    double seconds;
    std::uint64_t digest;
  };
  std::vector<Timing> timings;
  double t1 = 0.0;

  for (int w : config.workers) {
    {
      // Warm-up: one untimed step to fault pages and spin up threads.
      Grid2D warm = initial;
      RunConfig once = config;
      once.steps = 1;
      run_strategy(warm, once, w);
    }
    Grid2D grid = initial;
    const auto start = std::chrono::steady_clock::now();
    run_strategy(grid, config, w);
    const auto stop = std::chrono::steady_clock::now();
    const double seconds =
        std::chrono::duration_cast<std::chrono::duration<double>>(stop - start)
            .count();
    const GridChecksum sum = grid_checksum(grid);
    timings.push_back({w, seconds, sum.digest});
    if (w == 1) t1 = seconds;
  }

  for (const Timing& t : timings) {
    if (t.digest != timings.front().digest) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%016llx vs %016llx",
                    static_cast<unsigned long long>(timings.front().digest),
                    static_cast<unsigned long long>(t.digest));
      throw EquivalenceError("checksum mismatch between " +
                             std::to_string(timings.front().workers) +
                             " and " + std::to_string(t.workers) +
                             " workers: " + buf);
    }
  }

  std::vector<BenchRecord> records;
  records.reserve(timings.size());
  for (const Timing& t : timings) {
    const double speedup = t1 / t.seconds;
    records.push_back(
        {t.workers, t.seconds, speedup, speedup / t.workers, t.digest});
  }
  return records;
}

std::vector<BenchRecord> make_records(const std::vector<int>& workers,
                                      const std::vector<double>& times,
                                      std::uint64_t checksum) {
  if (workers.size() != times.size() || workers.empty() || workers[0] != 1) {
    throw ConfigError("records need matching worker/time lists starting at 1");
  }
  std::vector<BenchRecord> records;
  records.reserve(workers.size());
  for (std::size_t k = 0; k < workers.size(); ++k) {
    const double speedup = times[0] / times[k];
    records.push_back(
        {workers[k], times[k], speedup, speedup / workers[k], checksum});
  }
  return records;
}

std::string render_csv(const std::vector<BenchRecord>& records) {
  std::string out = "workers,time_s,speedup,efficiency,checksum\n";
  for (const BenchRecord& r : records) {
    char line[128];
    std::snprintf(line, sizeof(line), "%d,%.2f,%.2f,%.2f%%,%016llx\n",
                  r.workers, r.time_s, r.speedup, 100.0 * r.efficiency,
                  static_cast<unsigned long long>(r.checksum));
    out += line;
  }
  return out;
}

std::vector<BenchRecord> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) ||
      line != "workers,time_s,speedup,efficiency,checksum") {
    throw IoError("unrecognized CSV header: '" + line + "'");
  }
  std::vector<BenchRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    BenchRecord r;
    double efficiency_pct = 0.0;
    unsigned long long digest = 0;
    if (std::sscanf(line.c_str(), "%d,%lf,%lf,%lf%%,%llx", &r.workers,
                    &r.time_s, &r.speedup, &efficiency_pct, &digest) != 5) {
      throw IoError("malformed CSV row: '" + line + "'");
    }
    r.efficiency = efficiency_pct / 100.0;
    r.checksum = digest;
    records.push_back(r);
  }
  return records;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace hydro
