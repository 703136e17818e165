#include "hydro/worker_pool.hpp"

#include "hydro/errors.hpp"

namespace hydro {

WorkerPool::WorkerPool(int workers) : size_(workers) {
  if (workers < 1) throw ConfigError("worker pool needs at least 1 worker");
  threads_.reserve(static_cast<std::size_t>(workers) - 1);
  for (int id = 1; id < workers; ++id) {
    threads_.emplace_back([this, id] { thread_main(id); });
  }
}

WorkerPool::~WorkerPool() {
  {
    std::lock_guard<std::mutex> lock(mu_);
    stop_ = true;
  }
  cv_start_.notify_all();
  for (auto& t : threads_) t.join();
}

void WorkerPool::execute(const std::function<void(int)>& fn, int id) {
  try {
    fn(id);
  } catch (const DeadlockError&) {
    std::lock_guard<std::mutex> lock(mu_);
    if (!deadlock_error_) deadlock_error_ = std::current_exception();
  } catch (...) {
    std::lock_guard<std::mutex> lock(mu_);
    if (!primary_error_) primary_error_ = std::current_exception();
  }
}

void WorkerPool::run(const std::function<void(int)>& fn) {
  if (size_ == 1) {
    fn(0);  // inline fast path; exceptions propagate directly
    return;
  }

  {
    std::lock_guard<std::mutex> lock(mu_);
    job_ = &fn;
    remaining_ = size_ - 1;
    ++generation_;
  }
  cv_start_.notify_all();

  execute(fn, 0);

  std::exception_ptr primary, deadlock;
  {
    std::unique_lock<std::mutex> lock(mu_);
    cv_done_.wait(lock, [this] { return remaining_ == 0; });
    job_ = nullptr;
    primary = primary_error_;
    deadlock = deadlock_error_;
    primary_error_ = nullptr;
    deadlock_error_ = nullptr;
  }
  if (primary) std::rethrow_exception(primary);
  if (deadlock) std::rethrow_exception(deadlock);
}

void WorkerPool::thread_main(int id) {
  std::uint64_t seen = 0;
  for (;;) {
    const std::function<void(int)>* job = nullptr;
    {
      std::unique_lock<std::mutex> lock(mu_);
      cv_start_.wait(lock,
                     [&] { return stop_ || generation_ != seen; });
      if (stop_) return;
      seen = generation_;
      job = job_;
    }
    execute(*job, id);
    {
      std::lock_guard<std::mutex> lock(mu_);
      --remaining_;
    }
    cv_done_.notify_one();
  }
}

}  // namespace hydro
