#pragma once

// Accounting for the task strategy's memory claim: strip temporaries are
// worker-local and short-lived (their live count never exceeds the worker
// count), while the only per-decomposition overhead is the preallocated
// interface storage.

#include <atomic>
#include <cstddef>

namespace hydro {

class MemoryLedger {
 public:
  void strip_acquired() {
    const int live = live_strips_.fetch_add(1, std::memory_order_relaxed) + 1;
    int high = high_water_.load(std::memory_order_relaxed);
    while (live > high && !high_water_.compare_exchange_weak(
                              high, live, std::memory_order_relaxed)) {
    }
  }
  void strip_released() {
    live_strips_.fetch_sub(1, std::memory_order_relaxed);
  }

  void add_interface_bytes(std::size_t bytes) {
    interface_bytes_.fetch_add(bytes, std::memory_order_relaxed);
  }

  int live_strips() const {
    return live_strips_.load(std::memory_order_relaxed);
  }
  int high_water_strips() const {
    return high_water_.load(std::memory_order_relaxed);
  }
  std::size_t interface_bytes() const {
    return interface_bytes_.load(std::memory_order_relaxed);
  }

 private:
  std::atomic<int> live_strips_{0};
  std::atomic<int> high_water_{0};
  std::atomic<std::size_t> interface_bytes_{0};
};

// Scope guard for one worker's strip temporaries.
class ScopedStripBuffer {
 public:
  explicit ScopedStripBuffer(MemoryLedger* ledger) : ledger_(ledger) {
    if (ledger_) ledger_->strip_acquired();
  }
  ~ScopedStripBuffer() {
    if (ledger_) ledger_->strip_released();
  }
  ScopedStripBuffer(const ScopedStripBuffer&) = delete;
  ScopedStripBuffer& operator=(const ScopedStripBuffer&) = delete;

 private:
  MemoryLedger* ledger_;
};

}  // namespace hydro
