#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "dangsim/addrtable.hpp"
#include "dangsim/logcache.hpp"
#include "dangsim/stats.hpp"

namespace dangsim {

enum class FreeOutcome : uint8_t {
  Released,
  DeferredPeriod,
  DeferredHeap,
  DoubleFree,
};

struct FreeResult {
  FreeOutcome outcome = FreeOutcome::Released;
  uint64_t root = 0;  // deferral root id for DeferredHeap
};

struct ReaperConfig {
  uint64_t period_threshold = 1000;
  bool oracle_check = false;  // audit every release against the sweep oracle
};

// Delayed free: user frees park an object until verification proves no
// mapped word references it. Objects whose remaining references all live
// inside one heap object wait on that object's release; everything else
// waits on the period list, swept when it outgrows the threshold.
class Reaper {
 public:
  Reaper(SimSpace& space, AddrTable& table, LogStore& logs, LogCache& cache,
         Compression compression, ReaperConfig cfg, StatsReport& stats);

  // Re-reads every logged candidate location of the object's (possibly
  // shared) log and returns the addresses that currently hold a pointer
  // with this object's ID, deduplicated in log order.
  std::vector<uint64_t> verify_object(const ObjectRecord& rec) const;

  FreeResult on_free(TaggedWord ptr);

  // Immediate release; requires verify_object to have come back empty.
  // Deferred dependents are re-dispatched through the same classification,
  // iteratively, so arbitrarily long chains cascade without recursion.
  void release_now(ObjectRecord& rec);

  // One pass over the period list; returns how many of its members released.
  uint64_t periodical_free();

  // Settle to a fixed point: re-verify every parked object (period list and
  // all heap deferral lists) until a full round releases nothing.
  void flush_all();

  size_t period_list_size() const { return period_list_.size(); }

 private:
  FreeResult classify_freed(ObjectRecord& rec, std::vector<uint64_t>* cascade,
                            bool allow_period_trigger);
  void release_one(ObjectRecord& rec, std::vector<uint64_t>& cascade);
  void drain(std::vector<uint64_t>& cascade);
  ObjectRecord& parked(uint64_t id) const;

  SimSpace& space_;
  AddrTable& table_;
  LogStore& logs_;
  LogCache& cache_;
  Compression compression_;
  ReaperConfig cfg_;
  StatsReport& stats_;
  std::deque<uint64_t> period_list_;  // ref_period_free_list, FIFO
};

}  // namespace dangsim
