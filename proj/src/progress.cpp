#include "hydro/progress.hpp"

#include <string>
#include <thread>

#include "hydro/errors.hpp"

namespace hydro {

ProgressTable::ProgressTable(int workers)
    : slots_(static_cast<std::size_t>(workers)) {
  if (workers < 1) throw ConfigError("progress table needs >= 1 worker");
}

void ProgressTable::reset() {
  for (auto& slot : slots_) slot.value.store(0, std::memory_order_relaxed);
  // The callers' sweep barrier publishes this reset to the workers.
}

void ProgressTable::publish(int worker, int strip_ordinal) {
  auto& slot = slots_[worker].value;
  const int last = slot.load(std::memory_order_relaxed);  // single writer
  if (strip_ordinal != last + 1) {
    throw ProtocolError("worker " + std::to_string(worker) +
                        " published strip " + std::to_string(strip_ordinal) +
                        " after strip " + std::to_string(last) +
                        "; counters must advance by one");
  }
  slot.store(strip_ordinal, std::memory_order_release);
}

void ProgressTable::wait_for(int worker, const std::vector<int>& neighbors,
                             int strip_ordinal,
                             std::chrono::milliseconds timeout) const {
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  for (int nb : neighbors) {
    while (slots_[nb].value.load(std::memory_order_acquire) < strip_ordinal) {
      if (std::chrono::steady_clock::now() >= deadline) {
        std::string msg = "worker " + std::to_string(worker) +
                          " timed out before writing strip " +
                          std::to_string(strip_ordinal) + "; counters:";
        for (int w = 0; w < workers(); ++w) {
          msg += " w" + std::to_string(w) + "=" +
                 std::to_string(last_read(w));
        }
        msg += "; stalled on worker " + std::to_string(nb);
        throw DeadlockError(msg);
      }
      std::this_thread::yield();
    }
  }
}

}  // namespace hydro
