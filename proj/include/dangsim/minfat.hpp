#pragma once

#include <bit>
#include <cstdint>

#include "dangsim/error.hpp"

// Tagged-pointer arithmetic. A pointer word carries the size-class exponent
// in its top 6 bits; truncating the low bits of the address field recovers
// the base of the allocation, which doubles as the object's implicit ID.

namespace dangsim {

inline constexpr int kTagShift = 58;
inline constexpr uint64_t kAddrMask = (uint64_t{1} << kTagShift) - 1;
inline constexpr uint32_t kMinExponent = 4;   // smallest class: 16 bytes
inline constexpr uint32_t kMaxExponent = 46;
inline constexpr uint64_t kMaxRequest = uint64_t{1} << 46;
inline constexpr uint64_t kMaxBase = uint64_t{1} << 48;

struct TaggedWord {
  uint64_t raw = 0;

  constexpr uint32_t tag() const { return static_cast<uint32_t>(raw >> kTagShift); }
  constexpr uint64_t addr() const { return raw & kAddrMask; }
  constexpr bool is_pointer() const { return tag() >= kMinExponent; }

  friend constexpr TaggedWord operator+(TaggedWord p, uint64_t offset) {
    return TaggedWord{p.raw + offset};
  }
  constexpr bool operator==(const TaggedWord&) const = default;
};

struct SizeClass {
  uint32_t exponent = 0;       // B
  uint64_t alloc_size = 0;     // 2^B
  constexpr bool operator==(const SizeClass&) const = default;
};

// B = max(4, ceil(log2 requested)); allocations are rounded up to powers of
// two so the class floor keeps room for one pointer slot plus alignment.
inline SizeClass size_class(uint64_t requested) {
  if (requested == 0 || requested > kMaxRequest) {
    throw SimError(ErrorKind::SizeOutOfRange,
                   "requested " + std::to_string(requested));
  }
  uint32_t b = requested <= 1 ? 0 : static_cast<uint32_t>(std::bit_width(requested - 1));
  if (b < kMinExponent) b = kMinExponent;
  return SizeClass{b, uint64_t{1} << b};
}

inline TaggedWord encode(uint64_t base, uint32_t exponent) {
  if (base >= kMaxBase) {
    throw SimError(ErrorKind::SizeOutOfRange, "base beyond address space");
  }
  if (base & ((uint64_t{1} << exponent) - 1)) {
    throw SimError(ErrorKind::AlignmentError,
                   "base not aligned to its size class");
  }
  return TaggedWord{(uint64_t{exponent} << kTagShift) | base};
}

// Implicit object ID: the address field with its low B bits cleared.
inline uint64_t id_of(TaggedWord p) {
  uint32_t b = p.tag();
  if (b < kMinExponent) {
    throw SimError(ErrorKind::NotAPointer,
                   "tag " + std::to_string(b) + " is not a pointer encoding");
  }
  return p.addr() & ~((uint64_t{1} << b) - 1);
}

// Plain address, interior offset preserved.
inline constexpr uint64_t strip(TaggedWord p) { return p.addr(); }

}  // namespace dangsim
