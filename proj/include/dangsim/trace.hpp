#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dangsim/error.hpp"

namespace dangsim {

// One trace line, e.g.:
//   alloc buf 48 high       # power-of-two object, forced into the hash region
//   store buf+0x8 p         # pointer store, tracked
//   storei stack:3 42       # plain data store
//   free p
//   expect-released p
// Locations are stack:K, global:K or NAME+OFF; pointer expressions are
// NAME[+OFF] or null. '#' starts a comment.

struct Loc {
  enum class Kind : uint8_t { Stack, Global, Object };
  Kind kind = Kind::Stack;
  uint64_t slot = 0;     // stack/global word index
  std::string name;      // object locations
  uint64_t offset = 0;   // byte offset into the object
  bool operator==(const Loc&) const = default;
};

struct PtrExpr {
  bool is_null = false;
  std::string name;
  uint64_t offset = 0;
  bool operator==(const PtrExpr&) const = default;
};

struct AllocEvent {
  std::string name;
  uint64_t size = 0;
  bool high = false;
  bool operator==(const AllocEvent&) const = default;
};
struct StoreEvent {
  Loc loc;
  PtrExpr value;
  bool operator==(const StoreEvent&) const = default;
};
struct StoreDataEvent {
  Loc loc;
  uint64_t value = 0;
  bool operator==(const StoreDataEvent&) const = default;
};
struct LoadEvent {
  Loc loc;
  bool operator==(const LoadEvent&) const = default;
};
struct FreeEvent {
  PtrExpr ptr;
  bool operator==(const FreeEvent&) const = default;
};
struct ReallocEvent {
  std::string old_name;
  std::string new_name;
  uint64_t size = 0;
  bool operator==(const ReallocEvent&) const = default;
};
struct PeriodEvent {
  bool operator==(const PeriodEvent&) const = default;
};
struct FlushEvent {
  bool operator==(const FlushEvent&) const = default;
};
struct ExpectEvent {
  std::string name;
  bool released = false;
  bool operator==(const ExpectEvent&) const = default;
};

using TraceOp =
    std::variant<AllocEvent, StoreEvent, StoreDataEvent, LoadEvent, FreeEvent,
                 ReallocEvent, PeriodEvent, FlushEvent, ExpectEvent>;

struct TraceEvent {
  TraceOp op;
  uint32_t line = 0;

  // Source position is not part of event identity.
  friend bool operator==(const TraceEvent& a, const TraceEvent& b) {
    return a.op == b.op;
  }
};

inline constexpr uint64_t kMaxWindowSlot = uint64_t{1} << 17;

std::vector<TraceEvent> parse_trace(std::string_view text);
std::string render_trace(const std::vector<TraceEvent>& events);

}  // namespace dangsim
