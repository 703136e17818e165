#pragma once

// Exhaustive model checker for the coarse-grain synchronization protocol.
//
// The abstraction: N workers own adjacent bands of strips and sweep S strips
// each, in lockstep ordinals 1..S.  Per strip a worker executes, in program
// order, the four protocol events
//
//   READ(s)     copy strip s plus the facing neighbors' boundary cells
//   PUBLISH(s)  advance this worker's progress counter to s
//   COMPUTE(s)  produce strip s's update from the copy
//   WRITE(s)    store the update  [gated: every facing neighbor's counter
//                                  must have reached s]
//
// Workers are arranged in a chain (worker w faces w-1 and w+1), which is
// exactly the topology a decomposition column presents during a column
// sweep.  The checker enumerates every reachable interleaving by BFS over
// the vector of per-worker program counters -- the protocol state is a pure
// function of those counters, so the graph is finite and small.
//
// Safety is NOT judged by the gate itself: the checker independently
// verifies, at every WRITE(s) transition, that each facing neighbor has
// finished its READ(s) (the event that copies the boundary cells WRITE(s)
// overwrites).  Runs with the gate disabled must therefore report
// violations -- that negative test is what gives the checker teeth.

#include <cstdint>
#include <cstdlib>
#include <queue>
#include <unordered_set>
#include <vector>

namespace protocol_model {

enum class Event : int { Read = 0, Publish = 1, Compute = 2, Write = 3 };

struct ExplorationResult {
  long long states = 0;             // distinct reachable states
  long long transitions = 0;        // explored edges
  long long write_violations = 0;   // WRITE(s) before a neighbor's READ(s)
  long long overlap_before_write = 0;  // COMPUTE(s+1) while a neighbor's
                                       // WRITE(s) is still pending
  long long overlap_before_read = 0;   // COMPUTE(s+1) while a neighbor's
                                       // READ(s) is still pending
  int max_publish_lead = 0;         // max |counter(w) - counter(neighbor)|
  bool deadlock = false;            // reachable state with no successor
};

class ChainModel {
 public:
  // workers in a chain, each sweeping `strips` strips.
  ChainModel(int workers, int strips) : n_(workers), s_(strips) {}

  // Gate toggle: when false, WRITE is always enabled (the buggy protocol).
  void set_gate_enabled(bool enabled) { gate_ = enabled; }

  // Gate strictness offset: WRITE(s) waits for neighbor counters >= s+off.
  // The faithful protocol uses 0; 1 models an over-strict gate that must
  // deadlock, proving the checker detects deadlocks at all.
  void set_gate_offset(int off) { gate_offset_ = off; }

  ExplorationResult explore() const {
    const int events_per_worker = 4 * s_;
    const std::uint64_t base = events_per_worker + 1;

    auto encode = [&](const std::vector<int>& pc) {
      std::uint64_t code = 0;
      for (int w = 0; w < n_; ++w) code = code * base + pc[w];
      return code;
    };

    // Counter of worker w (strips published) is derivable from its program
    // counter: PUBLISH(s) is event 4(s-1)+1, so pc > 4(s-1)+1 means s is
    // published.
    auto published = [](int pc) { return (pc + 2) / 4; };
    auto reads_done = [](int pc) { return (pc + 3) / 4; };
    auto writes_done = [](int pc) { return pc / 4; };

    ExplorationResult result;
    std::vector<int> start(n_, 0);
    std::unordered_set<std::uint64_t> seen;
    std::queue<std::vector<int>> frontier;
    seen.insert(encode(start));
    frontier.push(start);

    while (!frontier.empty()) {
      const auto pc = frontier.front();
      frontier.pop();
      ++result.states;

      for (int w = 0; w < n_; ++w) {
        for (int other = 0; other < n_; ++other) {
          if (other == w) continue;
          if (std::abs(other - w) == 1) {
            const int lead = std::abs(published(pc[w]) - published(pc[other]));
            if (lead > result.max_publish_lead) result.max_publish_lead = lead;
          }
        }
      }

      bool any_enabled = false;
      for (int w = 0; w < n_; ++w) {
        if (pc[w] == events_per_worker) continue;  // worker finished
        const Event ev = static_cast<Event>(pc[w] % 4);
        const int strip = pc[w] / 4 + 1;

        if (ev == Event::Write && gate_) {
          bool ready = true;
          for (int nb : {w - 1, w + 1}) {
            if (nb < 0 || nb >= n_) continue;
            if (published(pc[nb]) < strip + gate_offset_) ready = false;
          }
          if (!ready) continue;  // gate holds this worker
        }
        any_enabled = true;
        ++result.transitions;

        // Observations at the moment the transition fires.
        if (ev == Event::Write) {
          for (int nb : {w - 1, w + 1}) {
            if (nb < 0 || nb >= n_) continue;
            if (reads_done(pc[nb]) < strip) ++result.write_violations;
          }
        }
        if (ev == Event::Compute && strip >= 2) {
          for (int nb : {w - 1, w + 1}) {
            if (nb < 0 || nb >= n_) continue;
            if (writes_done(pc[nb]) < strip - 1) ++result.overlap_before_write;
            if (reads_done(pc[nb]) < strip - 1) ++result.overlap_before_read;
          }
        }

        auto next = pc;
        next[w] += 1;
        if (seen.insert(encode(next)).second) frontier.push(next);
      }

      bool all_done = true;
      for (int w = 0; w < n_; ++w) {
        if (pc[w] != events_per_worker) all_done = false;
      }
      if (!any_enabled && !all_done) result.deadlock = true;
    }
    return result;
  }

 private:
  int n_;
  int s_;
  bool gate_ = true;
  int gate_offset_ = 0;
};

}  // namespace protocol_model
