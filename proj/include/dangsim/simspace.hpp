#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "dangsim/minfat.hpp"

namespace dangsim {

enum class ValueKind : uint8_t { Data, Pointer };

// One 64-bit word of simulated memory. The kind is explicit so the engine
// and the sweep oracle agree on what counts as a reference.
struct SimValue {
  ValueKind kind = ValueKind::Data;
  uint64_t word = 0;
  constexpr bool operator==(const SimValue&) const = default;
};

enum class ObjState : uint8_t { Live, UserFreed, Released };
enum class Placement : uint8_t { Low, High };

using LogId = uint32_t;
inline constexpr LogId kNoLog = 0xFFFFFFFFu;

struct ObjectRecord {
  uint64_t id = 0;        // base address, the implicit ID
  uint32_t exponent = 0;  // size-class exponent
  uint64_t serial = 0;    // unique per allocation; survives base reuse
  ObjState state = ObjState::Live;
  Placement placement = Placement::Low;
  LogId log = kNoLog;
  // ref_heap_free_list: ids of user-freed objects whose release waits on this
  // object because their only remaining references live inside it.
  std::vector<uint64_t> deferred;

  uint64_t size() const { return uint64_t{1} << exponent; }
  uint64_t end() const { return id + size(); }
};

// Identity of one allocation across base-address reuse.
struct ObjKey {
  uint64_t id = 0;
  uint64_t serial = 0;
  constexpr auto operator<=>(const ObjKey&) const = default;
};

// Simulated sparse 64-bit address space with a power-of-two heap allocator.
// The heap is split at 2^direct_bits into a low (direct-map) and a high
// (hash) region; stack and global windows sit above any heap address so a
// range check classifies a location. Object words are implicitly
// zero-filled on allocation; only explicitly written words are stored.
class SimSpace {
 public:
  static constexpr uint64_t kHeapLowBase = 0x10000;
  static constexpr uint64_t kHeapCeiling = uint64_t{1} << 46;
  static constexpr uint64_t kStackBase = uint64_t{1} << 46;
  static constexpr uint64_t kGlobalBase = (uint64_t{1} << 46) + (uint64_t{1} << 21);
  static constexpr uint64_t kWindowBytes = uint64_t{1} << 20;

  explicit SimSpace(uint32_t direct_bits = 32);

  // Reserves an aligned 2^B range (lowest address first, recycled ranges
  // preferred) and returns the record plus its encoded pointer.
  ObjectRecord& allocate(uint64_t size, Placement where);

  TaggedWord pointer_to(const ObjectRecord& rec) const {
    return encode(rec.id, rec.exponent);
  }

  void write_word(uint64_t addr, SimValue v);
  // nullopt = Absent. Words inside non-Released objects default to Data(0).
  std::optional<SimValue> read_word(uint64_t addr) const;

  // The unique non-Released object whose range contains addr, else nullptr.
  ObjectRecord* container_of(uint64_t addr);
  const ObjectRecord* container_of(uint64_t addr) const;

  // Record lookup by base id, any state (Released records persist as
  // tombstones until their range is reused, so stale frees classify as
  // double frees rather than unknown ids).
  ObjectRecord* find(uint64_t id);
  const ObjectRecord* find(uint64_t id) const;

  // Marks Released, unmaps every word of the range and recycles it into the
  // per-size-class free list.
  void release_range(ObjectRecord& rec);

  static bool in_stack(uint64_t addr) {
    return addr >= kStackBase && addr < kStackBase + kWindowBytes;
  }
  static bool in_global(uint64_t addr) {
    return addr >= kGlobalBase && addr < kGlobalBase + kWindowBytes;
  }
  bool in_heap(uint64_t addr) const {
    return addr >= kHeapLowBase && addr < kHeapCeiling;
  }

  const std::unordered_map<uint64_t, SimValue>& words() const { return words_; }
  const std::unordered_map<uint64_t, ObjectRecord>& records() const { return records_; }
  uint64_t high_base() const { return high_base_; }

 private:
  uint64_t region_end(Placement where) const;
  uint64_t& bump(Placement where);

  uint64_t high_base_;
  uint64_t low_next_;
  uint64_t high_next_;
  uint64_t next_serial_ = 1;

  std::unordered_map<uint64_t, SimValue> words_;
  std::unordered_map<uint64_t, ObjectRecord> records_;
  std::map<uint64_t, uint64_t> live_ranges_;  // base -> end, non-Released
  // (placement, exponent) -> released bases, lowest-first reuse
  std::map<std::pair<uint8_t, uint32_t>, std::set<uint64_t>> free_ranges_;
};

}  // namespace dangsim
