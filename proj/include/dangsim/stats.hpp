#pragma once

#include <cstdint>
#include <string>

namespace dangsim {

// Per-run counters. The searching/verifying/logging/handling counters stand
// in for the corresponding time terms of the tracking pipeline: verifying
// counts cache probes, searching counts table lookups (only on a miss),
// logging counts log appends, handling counts free-side object
// verifications.
struct StatsReport {
  uint64_t n_obj = 0;
  uint64_t n_ptr_stores = 0;  // tracked pointer stores
  uint64_t n_logged = 0;
  uint64_t dup_hits = 0;
  uint64_t n_free_calls = 0;
  uint64_t n_released = 0;
  uint64_t n_retained_at_end = 0;
  uint64_t n_double_free = 0;
  uint64_t n_uaf_loads = 0;
  uint64_t searching = 0;
  uint64_t verifying = 0;
  uint64_t logging = 0;
  uint64_t handling = 0;

  double dup_rate() const {
    return n_ptr_stores == 0
               ? 0.0
               : 1.0 - static_cast<double>(n_logged) / static_cast<double>(n_ptr_stores);
  }

  // Flat key=value lines, fixed order, deterministic formatting.
  std::string to_text() const;
};

}  // namespace dangsim
