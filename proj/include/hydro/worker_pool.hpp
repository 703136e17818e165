#pragma once

// Minimal reusable thread pool: every run() hands the same callable to all
// workers (by worker id) and returns once each has finished, so a run()
// boundary doubles as the sweep barrier of the execution strategies.

#include <condition_variable>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace hydro {

class WorkerPool {
 public:
  // Spawns workers-1 threads; worker 0 runs on the calling thread, so a
  // one-worker pool executes inline with no threads at all.
  explicit WorkerPool(int workers);
  ~WorkerPool();

  WorkerPool(const WorkerPool&) = delete;
  WorkerPool& operator=(const WorkerPool&) = delete;

  int size() const { return size_; }

  // Runs fn(id) for id in [0, size) and blocks until every worker is done.
  // If workers threw, the first root-cause exception is rethrown here
  // (deadlock timeouts are reported only when nothing else failed, since a
  // worker dying is what usually strands its neighbors).
  void run(const std::function<void(int)>& fn);

 private:
  void thread_main(int id);
  void execute(const std::function<void(int)>& fn, int id);

  int size_;
  std::vector<std::thread> threads_;

  std::mutex mu_;
  std::condition_variable cv_start_;
  std::condition_variable cv_done_;
  const std::function<void(int)>* job_ = nullptr;
  std::uint64_t generation_ = 0;
  int remaining_ = 0;
  bool stop_ = false;
  std::exception_ptr primary_error_;
  std::exception_ptr deadlock_error_;
};

}  // namespace hydro
