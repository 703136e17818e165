#pragma once

// The four execution strategies.  All of them advance the grid through the
// same per-step sequence -- apply boundaries, bound dt, column sweep,
// re-apply boundaries, row sweep -- and differ only in who executes the
// strips and how writes are ordered against neighbor reads.  Every strategy
// must produce a grid bitwise identical to run_sequential.

#include <chrono>
#include <cstdint>

#include "hydro/decomposition.hpp"
#include "hydro/grid.hpp"
#include "hydro/memory_ledger.hpp"
#include "hydro/task_graph.hpp"
#include "hydro/types.hpp"

namespace hydro {

// One full step (both sweeps) with a caller-chosen dt, single-threaded.
void advance_sequential(Grid2D& grid, const GasModel& model, double dt);

// The bitwise oracle all other strategies are compared against.
void run_sequential(Grid2D& grid, const GasModel& model, int steps);

// Advances until simulated time t_end, clamping the final dt to land on it
// exactly.  Returns the number of steps taken.
int run_until(Grid2D& grid, const GasModel& model, double t_end);

// Strip loop statically partitioned into contiguous chunks, one per worker;
// a pool barrier separates sweeps.
void run_fine_grain(Grid2D& grid, const GasModel& model, int steps,
                    int workers);

struct CoarseOptions {
  // How long a worker spins at the write gate before the run is declared
  // deadlocked and a counter snapshot is thrown.
  std::chrono::milliseconds wait_timeout{30000};
};

// One worker per subdomain; per strip: READ (neighbor ghosts included),
// publish progress, COMPUTE, wait for the facing neighbors' reads, WRITE.
void run_coarse_grain(Grid2D& grid, const GasModel& model, int steps,
                      const DomainDecomposition& decomp,
                      const CoarseOptions& options = {});

struct TaskOptions {
  ReadyPolicy policy = ReadyPolicy::Fifo;
  std::uint64_t seed = 0;           // used by the random policy
  MemoryLedger* ledger = nullptr;   // optional footprint accounting
};

// Dependency-task execution over a worker pool: read_interface tasks
// snapshot subdomain boundaries, compute_domain tasks sweep whole subdomains
// strip by strip from those snapshots.  Any worker count and any ready-queue
// order must give the sequential result.
void run_task_graph(Grid2D& grid, const GasModel& model, int steps,
                    const DomainDecomposition& decomp, int workers,
                    const TaskOptions& options = {});

}  // namespace hydro
