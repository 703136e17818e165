#pragma once

// The coarse-grain synchronization protocol's shared state: one counter per
// worker holding the ordinal of the last strip that worker has finished
// reading this sweep.  Publishing uses a release store and waiting an
// acquire load, so a counter value, once observed, also makes every grid
// read the publisher performed for strips up to that ordinal visible --
// which is exactly the guarantee a neighbor needs before overwriting them.

#include <atomic>
#include <chrono>
#include <vector>

namespace hydro {

class ProgressTable {
 public:
  explicit ProgressTable(int workers);

  int workers() const { return static_cast<int>(slots_.size()); }

  // Main thread only, between sweeps (the pool barrier orders it).
  void reset();

  // Called by `worker` after finishing the READ of its strip with ordinal
  // `strip_ordinal` (1-based within the sweep).  Ordinals must advance by
  // exactly one.
  void publish(int worker, int strip_ordinal);

  int last_read(int worker) const {
    return slots_[worker].value.load(std::memory_order_acquire);
  }

  // Blocks `worker` until every counter in `neighbors` has reached
  // `strip_ordinal` -- the gate in front of the WRITE step.  On timeout,
  // throws a deadlock diagnostic naming the stalled counters.
  void wait_for(int worker, const std::vector<int>& neighbors,
                int strip_ordinal, std::chrono::milliseconds timeout) const;

 private:
  // One cache line per counter: neighbors spin on these, and the writer
  // should not invalidate unrelated counters.
  struct alignas(64) Slot {
    std::atomic<int> value{0};
  };
  std::vector<Slot> slots_;
};

}  // namespace hydro
