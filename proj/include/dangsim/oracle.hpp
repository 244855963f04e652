#pragma once

#include <cstdint>
#include <vector>

#include "dangsim/simspace.hpp"

// Ground-truth referencer: brute-force sweep of every mapped word, fully
// independent of logs, caches and compression. This is the whole-memory
// scan the tracked pointer graph exists to avoid; it stays cheap here only
// because the simulated space is sparse.

namespace dangsim {

struct SweepResult {
  uint64_t id = 0;
  std::vector<uint64_t> addrs;  // sorted referencing word addresses
};

SweepResult sweep(const SimSpace& space, uint64_t id);

// True when no mapped word still references the object; audited right
// before a release actually unmaps anything.
bool check_release(const SimSpace& space, uint64_t id);

// All user-freed objects that some mapped word still references.
std::vector<ObjKey> still_referenced_freed(const SimSpace& space);

}  // namespace dangsim
