#include "dangsim/logcache.hpp"

namespace dangsim {

LogCache::LogCache(CacheConfig cfg) {
  if (cfg.index_bits < 4 || cfg.index_bits > 28) {
    throw SimError(ErrorKind::SizeOutOfRange, "cache bits outside [4, 28]");
  }
  slots_.resize(size_t{1} << cfg.index_bits);
  mask_ = (uint64_t{1} << cfg.index_bits) - 1;
}

uint64_t LogCache::loc_key(const SimSpace& space, uint64_t loc,
                           const Compression& c) {
  switch (c.mode) {
    case Mode::Off:
      return loc;
    case Mode::Block:
      return loc & ~(c.block_bytes() - 1);
    case Mode::Full: {
      const ObjectRecord* rec = space.container_of(loc);
      return rec != nullptr ? rec->id : loc;
    }
  }
  return loc;
}

LogCache::Probe LogCache::probe_and_fill(uint64_t pointee_id, uint64_t key) {
  Slot& slot = slots_[index_of(pointee_id, key)];
  if (slot.epoch == epoch_ && slot.pointee_id == pointee_id &&
      slot.key == key) {
    return Probe::Hit;
  }
  if (inject_rate_ > 0.0 &&
      std::uniform_real_distribution<double>{0.0, 1.0}(inject_rng_) <
          inject_rate_) {
    return Probe::Hit;  // spurious: nothing filled, nothing will be logged
  }
  slot = Slot{pointee_id, key, epoch_};
  return Probe::Miss;
}

void LogCache::set_fault_injection(double rate, uint64_t seed) {
  inject_rate_ = rate;
  inject_rng_.seed(seed);
}

}  // namespace dangsim
