#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dangsim/logstore.hpp"

namespace dangsim {

struct CacheConfig {
  uint32_t index_bits = 20;  // log2 slot count
};

// Direct-mapped dedup cache answering "was this (pointee, location) pair
// already logged?" before any table lookup. Indexed by ID xor location key.
//
// Each slot stores the full (pointee_id, loc_key) pair and a hit requires
// both to match: storing only a location tag would let two IDs congruent
// modulo the slot count alias into a false hit, and a false hit here means
// a reference silently missing from the log, i.e. a possible premature
// free. A false miss only costs a duplicate log entry.
class LogCache {
 public:
  enum class Probe : uint8_t { Hit, Miss };

  explicit LogCache(CacheConfig cfg);

  // Location key under a compression mode: the raw word address, the
  // enclosing block-aligned address, or the containing object's ID (raw
  // address for stack/global locations).
  static uint64_t loc_key(const SimSpace& space, uint64_t loc,
                          const Compression& c);

  Probe probe_and_fill(uint64_t pointee_id, uint64_t key);
  Probe probe_and_fill(const SimSpace& space, uint64_t pointee_id,
                       uint64_t loc, const Compression& c) {
    return probe_and_fill(pointee_id, loc_key(space, loc, c));
  }

  void invalidate_all() { ++epoch_; }

  uint64_t index_of(uint64_t pointee_id, uint64_t key) const {
    return (pointee_id ^ key) & mask_;
  }

  // Test hook: forces the given fraction of would-be misses to report Hit
  // without filling or logging. Models the unsound tag-only slot variant so
  // the premature-free audit can be shown to catch it.
  void set_fault_injection(double rate, uint64_t seed);

 private:
  struct Slot {
    uint64_t pointee_id = 0;
    uint64_t key = 0;
    uint64_t epoch = 0;  // 0 = never filled
  };

  std::vector<Slot> slots_;
  uint64_t mask_;
  uint64_t epoch_ = 1;
  double inject_rate_ = 0.0;
  std::mt19937_64 inject_rng_;
};

}  // namespace dangsim
