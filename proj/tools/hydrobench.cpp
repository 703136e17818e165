// Command-line harness: single runs with checksums, worker-sweep benchmarks
// with CSV reports, and the validation suite.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hydro/audit.hpp"
#include "hydro/bench.hpp"
#include "hydro/errors.hpp"
#include "hydro/validation.hpp"

namespace {

std::vector<int> parse_worker_list(const std::string& text) {
  std::vector<int> workers;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    const std::string item = text.substr(pos, next - pos);
    try {
      std::size_t used = 0;
      const int value = std::stoi(item, &used);
      if (used != item.size() || value < 1) throw std::invalid_argument(item);
      workers.push_back(value);
    } catch (const std::exception&) {
      throw hydro::ConfigError("bad worker count '" + item +
                               "' in --workers (expected e.g. 1,2,4,8)");
    }
    pos = next + 1;
  }
  if (workers.empty()) {
    throw hydro::ConfigError("--workers needs at least one worker count");
  }
  return workers;
}

int cmd_run(const hydro::RunConfig& config) {
  if (config.workers.size() != 1) {
    throw hydro::ConfigError("run takes a single worker count; use the bench "
                             "subcommand for sweeps");
  }
  hydro::Grid2D grid = hydro::make_case(config);
  const auto start = std::chrono::steady_clock::now();
  hydro::run_strategy(grid, config, config.workers[0]);
  const auto stop = std::chrono::steady_clock::now();
  const double seconds =
      std::chrono::duration_cast<std::chrono::duration<double>>(stop - start)
          .count();

  const hydro::GridChecksum sum = hydro::grid_checksum(grid);
  const std::string line = hydro::format_checksum(sum);
  std::printf("case=%s %dx%d steps=%d strategy=%s workers=%d time_s=%.3f\n",
              config.case_name.c_str(), grid.nx(), grid.ny(), config.steps,
              config.strategy.c_str(), config.workers[0], seconds);
  std::printf("checksum %s\n", line.c_str());
  if (!config.output.empty()) {
    hydro::write_text_file(config.output, line + "\n");
  }
  return 0;
}

int cmd_bench(const hydro::RunConfig& config) {
  const std::vector<hydro::BenchRecord> records = hydro::run_benchmark(config);
  const std::string csv = hydro::render_csv(records);
  std::fputs(csv.c_str(), stdout);
  if (!config.output.empty()) {
    hydro::write_text_file(config.output, csv);
  }
  return 0;
}

int cmd_validate() {
  const std::vector<hydro::CheckResult> results = hydro::run_validation_suite();
  int failed = 0;
  for (const hydro::CheckResult& r : results) {
    std::printf("%s %s: %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str());
    if (!r.passed) ++failed;
  }
  std::printf("%d/%zu checks passed\n",
              static_cast<int>(results.size()) - failed, results.size());
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2D Euler solver benchmark harness"};
  app.set_config("--config", "",
                 "flat key=value file; any key of a long option name");
  app.require_subcommand(1);

  hydro::RunConfig config;
  std::string workers_text = "1";

  app.add_option("--case", config.case_name,
                 "test case: blast, sod, or uniform (sod uses --ny as the "
                 "tube length)")
      ->capture_default_str();
  app.add_option("--nx", config.nx, "interior cells along x")
      ->capture_default_str();
  app.add_option("--ny", config.ny, "interior cells along y")
      ->capture_default_str();
  app.add_option("--steps", config.steps, "time steps to advance")
      ->capture_default_str();
  app.add_option("--strategy", config.strategy,
                 "sequential, fine_grain, coarse_grain, or task_graph")
      ->capture_default_str();
  app.add_option("--workers", workers_text,
                 "worker count, or comma list for bench sweeps")
      ->capture_default_str();
  app.add_option("--p-rows", config.p_rows,
                 "decomposition rows (0 = derive from workers)")
      ->capture_default_str();
  app.add_option("--p-cols", config.p_cols,
                 "decomposition columns (0 = derive from workers)")
      ->capture_default_str();
  app.add_option("--gamma", config.gamma, "adiabatic index")
      ->capture_default_str();
  app.add_option("--cfl", config.cfl, "Courant factor")
      ->capture_default_str();
  app.add_option("--policy", config.policy,
                 "task ready-queue policy: fifo, lifo, or random")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "seed for the random task policy")
      ->capture_default_str();
  app.add_option("--output", config.output, "write the CSV/checksum here")
      ->capture_default_str();
  app.add_option("--timeout-ms", config.timeout_ms,
                 "coarse-grain write-gate timeout before a deadlock "
                 "diagnostic")
      ->capture_default_str();

  CLI::App* run = app.add_subcommand("run", "single execution + checksum");
  CLI::App* bench =
      app.add_subcommand("bench", "worker sweep + CSV speedup report");
  CLI::App* validate =
      app.add_subcommand("validate", "physics and equivalence oracle suite");
  for (CLI::App* sub : {run, bench, validate}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    config.workers = parse_worker_list(workers_text);
    if (run->parsed()) return cmd_run(config);
    if (bench->parsed()) return cmd_bench(config);
    return cmd_validate();
  } catch (const hydro::Error& e) {
    std::fprintf(stderr, "error: %s: %s\n", hydro::to_string(e.category()),
                 e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: internal: %s\n", e.what());
    return 1;
  }
}
