#pragma once

// The dependency-task formulation of one sweep: per decomposition column
// (for a column sweep), one read_interface task per interior interface and
// one compute_domain task per subdomain.  A compute task depends on the
// interfaces on both of its sides; those snapshots are both its ghost-cell
// source and the thing that must be taken before it overwrites its own
// cells, so the two in-edges carry the true and the anti dependency at
// once.  Different decomposition columns are fully independent.

#include <cstdint>
#include <string>
#include <vector>

#include "hydro/decomposition.hpp"
#include "hydro/types.hpp"

namespace hydro {

enum class TaskKind : std::uint8_t { ReadInterface, ComputeDomain };

struct TaskRecord {
  TaskKind kind;
  int di, dj;                  // interface coords (read) or domain coords
  std::vector<int> in_deps;    // interface ids this task waits for
  std::vector<int> out_deps;   // interface ids this task publishes
  std::vector<int> dependents; // task indices unlocked by completion
};

struct SweepTaskGraph {
  Axis axis;
  int p_rows, p_cols;
  int n_interfaces;
  std::vector<TaskRecord> tasks;

  int read_task_count() const;
  int compute_task_count() const;
};

// Interface ids are dense per axis: column-sweep interface (di,dj) with
// di in 1..p_rows-1; row-sweep interface (di,dj) with dj in 1..p_cols-1.
int interface_id(const DomainDecomposition& decomp, int di, int dj, Axis axis);

SweepTaskGraph build_sweep_tasks(const DomainDecomposition& decomp, Axis axis);

// Structural audit: counts match the decomposition, every in-dep has
// exactly one producer, no edges cross decomposition columns (resp. rows),
// and the graph is acyclic.  Throws TaskGraphError with the first problem.
void check_graph(const SweepTaskGraph& graph);

// One line per task -- used by the runtime's stall diagnostic.
std::string describe_task(const TaskRecord& task, Axis axis);

enum class ReadyPolicy : std::uint8_t { Fifo, Lifo, Random };

ReadyPolicy parse_policy(const std::string& name);
const char* to_string(ReadyPolicy policy);

}  // namespace hydro
