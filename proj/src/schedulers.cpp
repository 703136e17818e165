#include "hydro/schedulers.hpp"

#include <algorithm>
#include <condition_variable>
#include <deque>
#include <limits>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "hydro/errors.hpp"
#include "hydro/euler_kernel.hpp"
#include "hydro/progress.hpp"
#include "hydro/worker_pool.hpp"

namespace hydro {

namespace {

// Rethrows a strategy-internal failure with location context, preserving
// the error category for the CLI.
[[noreturn]] void rethrow_with_context(const Error& e,
                                       const std::string& context) {
  throw Error(e.category(), context + ": " + e.what());
}

const char* sweep_name(Axis axis) {
  return axis == Axis::Column ? "column sweep" : "row sweep";
}

// Per-worker buffers; reused across strips and sweeps so the hot path does
// not allocate.
struct WorkerBuffers {
  StateStrip strip;
  KernelScratch scratch;
};

struct alignas(64) PaddedDouble {
  double value = 0.0;
};

// Chunked min-reduction twin of compute_dt: each worker scans a contiguous
// row block with the same cell_dt_limit, the caller folds the block minima.
// A min over the same value set is independent of partition and order, so
// this is bitwise identical to the serial reduction.
double compute_dt_parallel(const Grid2D& grid, const GasModel& model,
                           WorkerPool& pool,
                           std::vector<PaddedDouble>& slots) {
  const int parts = pool.size();
  const double spacing = std::min(grid.dx(), grid.dy());
  pool.run([&](int w) {
    const IndexRange rows = split_range(grid.nx(), parts, w);
    double local = std::numeric_limits<double>::infinity();
    for (int i = rows.lo; i <= rows.hi; ++i) {
      for (int j = 1; j <= grid.ny(); ++j) {
        local = std::min(local, cell_dt_limit(grid.cell(i, j), spacing, model));
      }
    }
    slots[w].value = local;
  });
  double limit = slots[0].value;
  for (int w = 1; w < parts; ++w) limit = std::min(limit, slots[w].value);
  return model.cfl * limit;
}

// READ / COMPUTE / WRITE of one full-width strip.
void process_strip(Grid2D& grid, Axis axis, int index, double dt,
                   const GasModel& model, WorkerBuffers& buf) {
  const int hi = (axis == Axis::Column) ? grid.nx() : grid.ny();
  read_strip(grid, axis, index, 1, hi, buf.strip);
  sweep_strip(buf.strip, dt, model, buf.scratch);
  write_strip(grid, axis, index, 1, hi, buf.strip);
}

void sweep_axis_serial(Grid2D& grid, Axis axis, double dt,
                       const GasModel& model, WorkerBuffers& buf) {
  const int strips = (axis == Axis::Column) ? grid.ny() : grid.nx();
  for (int s = 1; s <= strips; ++s) {
    try {
      process_strip(grid, axis, s, dt, model, buf);
    } catch (const Error& e) {
      rethrow_with_context(e, std::string(sweep_name(axis)) + " strip " +
                                  std::to_string(s));
    }
  }
}

[[noreturn]] void rethrow_with_step(const Error& e, int step) {
  rethrow_with_context(e, "step " + std::to_string(step));
}

}  // namespace

void advance_sequential(Grid2D& grid, const GasModel& model, double dt) {
  WorkerBuffers buf;
  apply_boundary(grid);
  sweep_axis_serial(grid, Axis::Column, dt, model, buf);
  apply_boundary(grid);
  sweep_axis_serial(grid, Axis::Row, dt, model, buf);
}

void run_sequential(Grid2D& grid, const GasModel& model, int steps) {
  WorkerBuffers buf;
  for (int step = 0; step < steps; ++step) {
    try {
      apply_boundary(grid);
      const double dt = compute_dt(grid, model);
      sweep_axis_serial(grid, Axis::Column, dt, model, buf);
      apply_boundary(grid);
      sweep_axis_serial(grid, Axis::Row, dt, model, buf);
    } catch (const Error& e) {
      rethrow_with_step(e, step);
    }
  }
}

int run_until(Grid2D& grid, const GasModel& model, double t_end) {
  WorkerBuffers buf;
  double t = 0.0;
  int steps = 0;
  while (t < t_end) {
    try {
      apply_boundary(grid);
      double dt = compute_dt(grid, model);
      if (t + dt > t_end) dt = t_end - t;
      if (!(dt > 0.0) || t + dt == t) break;  // remaining time below 1 ulp
      sweep_axis_serial(grid, Axis::Column, dt, model, buf);
      apply_boundary(grid);
      sweep_axis_serial(grid, Axis::Row, dt, model, buf);
      t += dt;
      ++steps;
    } catch (const Error& e) {
      rethrow_with_step(e, steps);
    }
  }
  return steps;
}

void run_fine_grain(Grid2D& grid, const GasModel& model, int steps,
                    int workers) {
  if (workers < 1) throw ConfigError("fine_grain needs >= 1 worker");
  WorkerPool pool(workers);
  std::vector<PaddedDouble> dt_slots(workers);
  std::vector<WorkerBuffers> buffers(workers);

  const auto sweep = [&](Axis axis, double dt) {
    const int strips = (axis == Axis::Column) ? grid.ny() : grid.nx();
    pool.run([&](int w) {
      const IndexRange chunk = split_range(strips, workers, w);
      for (int s = chunk.lo; s <= chunk.hi; ++s) {
        try {
          process_strip(grid, axis, s, dt, model, buffers[w]);
        } catch (const Error& e) {
          rethrow_with_context(e, std::string(sweep_name(axis)) + " strip " +
                                      std::to_string(s) + " (worker " +
                                      std::to_string(w) + ")");
        }
      }
    });
  };

  for (int step = 0; step < steps; ++step) {
    try {
      apply_boundary(grid);
      const double dt = compute_dt_parallel(grid, model, pool, dt_slots);
      sweep(Axis::Column, dt);
      apply_boundary(grid);
      sweep(Axis::Row, dt);
    } catch (const Error& e) {
      rethrow_with_step(e, step);
    }
  }
}

void run_coarse_grain(Grid2D& grid, const GasModel& model, int steps,
                      const DomainDecomposition& decomp,
                      const CoarseOptions& options) {
  if (decomp.nx() != grid.nx() || decomp.ny() != grid.ny()) {
    throw ConfigError("decomposition extents do not match the grid");
  }
  const int p_cols = decomp.p_cols();
  const int workers = decomp.count();  // one worker per subdomain

  // Worker w owns subdomain (di, dj) with w = (di-1)*p_cols + (dj-1).
  // During the column sweep a worker's strips share columns with its
  // vertical neighbors; during the row sweep, with its horizontal ones.
  std::vector<std::vector<int>> column_neighbors(workers);
  std::vector<std::vector<int>> row_neighbors(workers);
  for (int w = 0; w < workers; ++w) {
    const int di = w / p_cols + 1;
    const int dj = w % p_cols + 1;
    const Subdomain& d = decomp.at(di, dj);
    if (d.has_down) column_neighbors[w].push_back(w - p_cols);
    if (d.has_up) column_neighbors[w].push_back(w + p_cols);
    if (d.has_left) row_neighbors[w].push_back(w - 1);
    if (d.has_right) row_neighbors[w].push_back(w + 1);
  }

  WorkerPool pool(workers);
  ProgressTable progress(workers);
  std::vector<PaddedDouble> dt_slots(workers);
  std::vector<WorkerBuffers> buffers(workers);

  const auto sweep = [&](Axis axis, double dt) {
    progress.reset();  // published to the workers by the pool.run handoff
    const auto& neighbors =
        (axis == Axis::Column) ? column_neighbors : row_neighbors;
    pool.run([&](int w) {
      const int di = w / p_cols + 1;
      const int dj = w % p_cols + 1;
      const Subdomain& d = decomp.at(di, dj);
      const int lo = (axis == Axis::Column) ? d.imin : d.jmin;
      const int hi = (axis == Axis::Column) ? d.imax : d.jmax;
      const int first = (axis == Axis::Column) ? d.jmin : d.imin;
      const int last = (axis == Axis::Column) ? d.jmax : d.imax;
      WorkerBuffers& buf = buffers[w];
      for (int s = first; s <= last; ++s) {
        const int ordinal = s - first + 1;
        try {
          read_strip(grid, axis, s, lo, hi, buf.strip);
          progress.publish(w, ordinal);
          sweep_strip(buf.strip, dt, model, buf.scratch);
          progress.wait_for(w, neighbors[w], ordinal, options.wait_timeout);
          write_strip(grid, axis, s, lo, hi, buf.strip);
        } catch (const DeadlockError&) {
          throw;  // already carries the counter snapshot
        } catch (const Error& e) {
          rethrow_with_context(
              e, std::string(sweep_name(axis)) + " strip " + std::to_string(s) +
                     " (subdomain " + std::to_string(di) + "," +
                     std::to_string(dj) + ")");
        }
      }
    });
  };

  for (int step = 0; step < steps; ++step) {
    try {
      apply_boundary(grid);
      const double dt = compute_dt_parallel(grid, model, pool, dt_slots);
      sweep(Axis::Column, dt);
      apply_boundary(grid);
      sweep(Axis::Row, dt);
    } catch (const Error& e) {
      rethrow_with_step(e, step);
    }
  }
}

namespace {

// Shared state of one task-graph sweep: a mutex-protected ready queue plus
// per-task unmet-dependency counts.  Queue handoff doubles as the
// publication edge between a read task's buffer fill and its dependents.
struct TaskRuntime {
  std::mutex mu;
  std::condition_variable cv;
  std::deque<int> ready;
  std::vector<int> unmet;
  int completed = 0;
  int idle = 0;
  bool done = false;
  std::mt19937_64 rng;

  void prepare(const SweepTaskGraph& graph) {
    ready.clear();
    unmet.resize(graph.tasks.size());
    completed = 0;
    idle = 0;
    done = false;
    for (std::size_t i = 0; i < graph.tasks.size(); ++i) {
      unmet[i] = static_cast<int>(graph.tasks[i].in_deps.size());
      if (unmet[i] == 0) ready.push_back(static_cast<int>(i));
    }
  }
};

int pick_ready_task(TaskRuntime& rt, ReadyPolicy policy) {
  switch (policy) {
    case ReadyPolicy::Fifo: {
      const int t = rt.ready.front();
      rt.ready.pop_front();
      return t;
    }
    case ReadyPolicy::Lifo: {
      const int t = rt.ready.back();
      rt.ready.pop_back();
      return t;
    }
    case ReadyPolicy::Random: {
      std::uniform_int_distribution<std::size_t> pick(0, rt.ready.size() - 1);
      const std::size_t at = pick(rt.rng);
      const int t = rt.ready[at];
      rt.ready.erase(rt.ready.begin() + static_cast<std::ptrdiff_t>(at));
      return t;
    }
  }
  throw ConfigError("unknown ready policy");
}

[[noreturn]] void throw_stall_dump(const SweepTaskGraph& graph,
                                   const TaskRuntime& rt) {
  std::string msg = "task graph stalled: " + std::to_string(rt.completed) +
                    " of " + std::to_string(graph.tasks.size()) +
                    " tasks completed and nothing is runnable; pending:";
  for (std::size_t i = 0; i < graph.tasks.size(); ++i) {
    if (rt.unmet[i] > 0) {
      msg += "\n  " + describe_task(graph.tasks[i], graph.axis) + " [" +
             std::to_string(rt.unmet[i]) + " unmet]";
    }
  }
  throw TaskGraphError(msg);
}

}  // namespace

void run_task_graph(Grid2D& grid, const GasModel& model, int steps,
                    const DomainDecomposition& decomp, int workers,
                    const TaskOptions& options) {
  if (decomp.nx() != grid.nx() || decomp.ny() != grid.ny()) {
    throw ConfigError("decomposition extents do not match the grid");
  }
  if (workers < 1) throw ConfigError("task_graph needs >= 1 worker");

  const SweepTaskGraph col_graph = build_sweep_tasks(decomp, Axis::Column);
  const SweepTaskGraph row_graph = build_sweep_tasks(decomp, Axis::Row);
  check_graph(col_graph);
  check_graph(row_graph);

  // Interface storage is preallocated once per run and reused every sweep:
  // the strategy's only decomposition-sized overhead.
  std::vector<InterfaceBuffer> col_ifaces;
  col_ifaces.reserve(static_cast<std::size_t>(col_graph.n_interfaces));
  for (int di = 1; di < decomp.p_rows(); ++di) {
    for (int dj = 1; dj <= decomp.p_cols(); ++dj) {
      col_ifaces.push_back(make_interface(decomp, di, dj, Axis::Column));
    }
  }
  std::vector<InterfaceBuffer> row_ifaces;
  row_ifaces.reserve(static_cast<std::size_t>(row_graph.n_interfaces));
  for (int di = 1; di <= decomp.p_rows(); ++di) {
    for (int dj = 1; dj < decomp.p_cols(); ++dj) {
      row_ifaces.push_back(make_interface(decomp, di, dj, Axis::Row));
    }
  }
  if (options.ledger) {
    for (const auto& b : col_ifaces) options.ledger->add_interface_bytes(b.bytes());
    for (const auto& b : row_ifaces) options.ledger->add_interface_bytes(b.bytes());
  }

  WorkerPool pool(workers);
  std::vector<PaddedDouble> dt_slots(workers);
  TaskRuntime rt;
  rt.rng.seed(options.seed);

  const auto execute_task = [&](const SweepTaskGraph& graph,
                                std::vector<InterfaceBuffer>& ifaces,
                                int task_idx, double dt) {
    const TaskRecord& task = graph.tasks[static_cast<std::size_t>(task_idx)];
    if (task.kind == TaskKind::ReadInterface) {
      fill_interface(grid, decomp, ifaces[task.out_deps[0]]);
      return;
    }
    // compute_domain: sweep every strip of the subdomain from the interface
    // snapshots, with task-local strip temporaries.
    ScopedStripBuffer guard(options.ledger);
    WorkerBuffers buf;
    const Subdomain& d = decomp.at(task.di, task.dj);
    const Axis axis = graph.axis;
    const InterfaceBuffer* iface_lo = nullptr;
    const InterfaceBuffer* iface_hi = nullptr;
    if (axis == Axis::Column) {
      if (d.has_down)
        iface_lo = &ifaces[interface_id(decomp, task.di - 1, task.dj, axis)];
      if (d.has_up)
        iface_hi = &ifaces[interface_id(decomp, task.di, task.dj, axis)];
    } else {
      if (d.has_left)
        iface_lo = &ifaces[interface_id(decomp, task.di, task.dj - 1, axis)];
      if (d.has_right)
        iface_hi = &ifaces[interface_id(decomp, task.di, task.dj, axis)];
    }
    const int lo = (axis == Axis::Column) ? d.imin : d.jmin;
    const int hi = (axis == Axis::Column) ? d.imax : d.jmax;
    const int first = (axis == Axis::Column) ? d.jmin : d.imin;
    const int last = (axis == Axis::Column) ? d.jmax : d.imax;
    for (int s = first; s <= last; ++s) {
      try {
        assemble_strip_from_interfaces(grid, decomp, task.di, task.dj, axis, s,
                                       iface_lo, iface_hi, buf.strip);
        sweep_strip(buf.strip, dt, model, buf.scratch);
        write_strip(grid, axis, s, lo, hi, buf.strip);
      } catch (const Error& e) {
        rethrow_with_context(
            e, std::string(sweep_name(axis)) + " strip " + std::to_string(s) +
                   " (task domain " + std::to_string(task.di) + "," +
                   std::to_string(task.dj) + ")");
      }
    }
  };

  const auto run_sweep = [&](const SweepTaskGraph& graph,
                             std::vector<InterfaceBuffer>& ifaces, double dt) {
    rt.prepare(graph);
    const int total = static_cast<int>(graph.tasks.size());
    pool.run([&](int) {
      for (;;) {
        int task_idx = -1;
        {
          std::unique_lock<std::mutex> lock(rt.mu);
          for (;;) {
            if (rt.done) return;
            if (!rt.ready.empty()) {
              task_idx = pick_ready_task(rt, options.policy);
              break;
            }
            ++rt.idle;
            if (rt.idle == workers && rt.completed < total) {
              rt.done = true;
              rt.cv.notify_all();
              throw_stall_dump(graph, rt);  // unlocks via unwinding
            }
            rt.cv.wait(lock);
            --rt.idle;
          }
        }

        try {
          execute_task(graph, ifaces, task_idx, dt);
        } catch (...) {
          // Without this the surviving workers would park forever waiting
          // for a completion count that can no longer be reached.
          {
            std::lock_guard<std::mutex> lock(rt.mu);
            rt.done = true;
          }
          rt.cv.notify_all();
          throw;
        }

        {
          std::lock_guard<std::mutex> lock(rt.mu);
          ++rt.completed;
          for (int dep : graph.tasks[static_cast<std::size_t>(task_idx)]
                             .dependents) {
            if (--rt.unmet[dep] == 0) rt.ready.push_back(dep);
          }
          if (rt.completed == total) rt.done = true;
        }
        rt.cv.notify_all();
      }
    });
  };

  for (int step = 0; step < steps; ++step) {
    try {
      apply_boundary(grid);
      const double dt = compute_dt_parallel(grid, model, pool, dt_slots);
      run_sweep(col_graph, col_ifaces, dt);
      apply_boundary(grid);
      run_sweep(row_graph, row_ifaces, dt);
    } catch (const Error& e) {
      rethrow_with_step(e, step);
    }
  }
}

}  // namespace hydro
