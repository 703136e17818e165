#include "hydro/task_graph.hpp"

#include <algorithm>
#include <queue>

#include "hydro/errors.hpp"

namespace hydro {

int SweepTaskGraph::read_task_count() const {
  return static_cast<int>(
      std::count_if(tasks.begin(), tasks.end(), [](const TaskRecord& t) {
        return t.kind == TaskKind::ReadInterface;
      }));
}

int SweepTaskGraph::compute_task_count() const {
  return static_cast<int>(tasks.size()) - read_task_count();
}

int interface_id(const DomainDecomposition& decomp, int di, int dj,
                 Axis axis) {
  if (axis == Axis::Column) {
    // di in 1..p_rows-1, dj in 1..p_cols
    return (di - 1) * decomp.p_cols() + (dj - 1);
  }
  // di in 1..p_rows, dj in 1..p_cols-1
  return (di - 1) * (decomp.p_cols() - 1) + (dj - 1);
}

SweepTaskGraph build_sweep_tasks(const DomainDecomposition& decomp,
                                 Axis axis) {
  SweepTaskGraph graph;
  graph.axis = axis;
  graph.p_rows = decomp.p_rows();
  graph.p_cols = decomp.p_cols();
  graph.n_interfaces = (axis == Axis::Column)
                           ? (decomp.p_rows() - 1) * decomp.p_cols()
                           : decomp.p_rows() * (decomp.p_cols() - 1);

  std::vector<int> producer(static_cast<std::size_t>(
                                std::max(graph.n_interfaces, 1)),
                            -1);

  // Read tasks first: one per interior interface, no inputs.
  if (axis == Axis::Column) {
    for (int dj = 1; dj <= decomp.p_cols(); ++dj) {
      for (int di = 1; di < decomp.p_rows(); ++di) {
        TaskRecord t;
        t.kind = TaskKind::ReadInterface;
        t.di = di;
        t.dj = dj;
        t.out_deps = {interface_id(decomp, di, dj, axis)};
        producer[t.out_deps[0]] = static_cast<int>(graph.tasks.size());
        graph.tasks.push_back(std::move(t));
      }
    }
    for (int dj = 1; dj <= decomp.p_cols(); ++dj) {
      for (int di = 1; di <= decomp.p_rows(); ++di) {
        TaskRecord t;
        t.kind = TaskKind::ComputeDomain;
        t.di = di;
        t.dj = dj;
        if (di > 1) t.in_deps.push_back(interface_id(decomp, di - 1, dj, axis));
        if (di < decomp.p_rows())
          t.in_deps.push_back(interface_id(decomp, di, dj, axis));
        graph.tasks.push_back(std::move(t));
      }
    }
  } else {
    for (int di = 1; di <= decomp.p_rows(); ++di) {
      for (int dj = 1; dj < decomp.p_cols(); ++dj) {
        TaskRecord t;
        t.kind = TaskKind::ReadInterface;
        t.di = di;
        t.dj = dj;
        t.out_deps = {interface_id(decomp, di, dj, axis)};
        producer[t.out_deps[0]] = static_cast<int>(graph.tasks.size());
        graph.tasks.push_back(std::move(t));
      }
    }
    for (int di = 1; di <= decomp.p_rows(); ++di) {
      for (int dj = 1; dj <= decomp.p_cols(); ++dj) {
        TaskRecord t;
        t.kind = TaskKind::ComputeDomain;
        t.di = di;
        t.dj = dj;
        if (dj > 1) t.in_deps.push_back(interface_id(decomp, di, dj - 1, axis));
        if (dj < decomp.p_cols())
          t.in_deps.push_back(interface_id(decomp, di, dj, axis));
        graph.tasks.push_back(std::move(t));
      }
    }
  }

  // Wire dependents from the producer map.
  for (std::size_t idx = 0; idx < graph.tasks.size(); ++idx) {
    for (int dep : graph.tasks[idx].in_deps) {
      graph.tasks[producer[dep]].dependents.push_back(static_cast<int>(idx));
    }
  }
  return graph;
}

void check_graph(const SweepTaskGraph& graph) {
  const int expect_reads = (graph.axis == Axis::Column)
                               ? (graph.p_rows - 1) * graph.p_cols
                               : graph.p_rows * (graph.p_cols - 1);
  const int expect_computes = graph.p_rows * graph.p_cols;
  if (graph.read_task_count() != expect_reads ||
      graph.compute_task_count() != expect_computes) {
    throw TaskGraphError(
        "task counts " + std::to_string(graph.read_task_count()) + " read + " +
        std::to_string(graph.compute_task_count()) + " compute, expected " +
        std::to_string(expect_reads) + " + " + std::to_string(expect_computes));
  }

  // Every interface id has exactly one producer, and producers are reads.
  std::vector<int> producers(static_cast<std::size_t>(graph.n_interfaces), 0);
  for (const TaskRecord& t : graph.tasks) {
    for (int e : t.out_deps) {
      if (e < 0 || e >= graph.n_interfaces) {
        throw TaskGraphError("out-dep id " + std::to_string(e) +
                             " out of range");
      }
      if (t.kind != TaskKind::ReadInterface) {
        throw TaskGraphError("compute task publishes interface " +
                             std::to_string(e));
      }
      ++producers[e];
    }
  }
  for (int e = 0; e < graph.n_interfaces; ++e) {
    if (producers[e] != 1) {
      throw TaskGraphError("interface " + std::to_string(e) + " has " +
                           std::to_string(producers[e]) +
                           " producers, expected 1");
    }
  }
  for (const TaskRecord& t : graph.tasks) {
    for (int e : t.in_deps) {
      if (e < 0 || e >= graph.n_interfaces) {
        throw TaskGraphError("in-dep id " + std::to_string(e) +
                             " out of range");
      }
    }
  }

  // No edges across decomposition columns (rows for a row sweep): each
  // compute's in-deps must be interfaces of its own column (row).
  for (const TaskRecord& t : graph.tasks) {
    if (t.kind != TaskKind::ComputeDomain) continue;
    for (int e : t.in_deps) {
      const int owner = (graph.axis == Axis::Column) ? e % graph.p_cols + 1
                                                     : e / std::max(graph.p_cols - 1, 1) + 1;
      const int mine = (graph.axis == Axis::Column) ? t.dj : t.di;
      if (owner != mine) {
        throw TaskGraphError("task (" + std::to_string(t.di) + "," +
                             std::to_string(t.dj) +
                             ") depends on interface of lane " +
                             std::to_string(owner));
      }
    }
  }

  // Acyclic by Kahn's algorithm: all tasks must drain.
  std::vector<int> unmet(graph.tasks.size());
  std::queue<int> ready;
  for (std::size_t i = 0; i < graph.tasks.size(); ++i) {
    unmet[i] = static_cast<int>(graph.tasks[i].in_deps.size());
    if (unmet[i] == 0) ready.push(static_cast<int>(i));
  }
  std::size_t drained = 0;
  while (!ready.empty()) {
    const int t = ready.front();
    ready.pop();
    ++drained;
    for (int d : graph.tasks[t].dependents) {
      if (--unmet[d] == 0) ready.push(d);
    }
  }
  if (drained != graph.tasks.size()) {
    throw TaskGraphError("dependency cycle: only " + std::to_string(drained) +
                         " of " + std::to_string(graph.tasks.size()) +
                         " tasks can run");
  }
}

std::string describe_task(const TaskRecord& task, Axis axis) {
  std::string s = (task.kind == TaskKind::ReadInterface) ? "read_interface("
                                                         : "compute_domain(";
  s += std::to_string(task.di) + "," + std::to_string(task.dj) + ")";
  s += (axis == Axis::Column) ? " [column sweep]" : " [row sweep]";
  if (!task.in_deps.empty()) {
    s += " waits on interfaces {";
    for (std::size_t k = 0; k < task.in_deps.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(task.in_deps[k]);
    }
    s += "}";
  }
  return s;
}

ReadyPolicy parse_policy(const std::string& name) {
  if (name == "fifo") return ReadyPolicy::Fifo;
  if (name == "lifo") return ReadyPolicy::Lifo;
  if (name == "random") return ReadyPolicy::Random;
  throw ConfigError("unknown scheduling policy '" + name +
                    "' (expected fifo, lifo, or random)");
}

const char* to_string(ReadyPolicy policy) {
  switch (policy) {
    case ReadyPolicy::Fifo:
      return "fifo";
    case ReadyPolicy::Lifo:
      return "lifo";
    case ReadyPolicy::Random:
      return "random";
  }
  return "unknown";
}

}  // namespace hydro
