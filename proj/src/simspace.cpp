#include "dangsim/simspace.hpp"

#include <algorithm>

namespace dangsim {

namespace {
uint64_t align_up(uint64_t x, uint64_t align) {
  return (x + align - 1) & ~(align - 1);
}
}  // namespace

SimSpace::SimSpace(uint32_t direct_bits) {
  high_base_ = std::min(uint64_t{1} << direct_bits, kHeapCeiling);
  low_next_ = kHeapLowBase;
  high_next_ = high_base_;
}

uint64_t SimSpace::region_end(Placement where) const {
  return where == Placement::Low ? high_base_ : kHeapCeiling;
}

uint64_t& SimSpace::bump(Placement where) {
  return where == Placement::Low ? low_next_ : high_next_;
}

ObjectRecord& SimSpace::allocate(uint64_t size, Placement where) {
  SizeClass cls = size_class(size);
  uint64_t base;

  auto key = std::make_pair(static_cast<uint8_t>(where), cls.exponent);
  auto fit = free_ranges_.find(key);
  if (fit != free_ranges_.end() && !fit->second.empty()) {
    // Recycled ranges sit below the bump pointer, so taking the lowest one
    // keeps allocation lowest-address-first.
    base = *fit->second.begin();
    fit->second.erase(fit->second.begin());
    records_.erase(base);  // drop the tombstone of the prior occupant
  } else {
    base = align_up(bump(where), cls.alloc_size);
    if (base < bump(where) || base + cls.alloc_size > region_end(where) ||
        base + cls.alloc_size < base) {
      throw SimError(ErrorKind::OutOfSimMemory,
                     (where == Placement::Low ? "low" : "high") +
                         std::string(" heap region exhausted"));
    }
    bump(where) = base + cls.alloc_size;
  }

  ObjectRecord rec;
  rec.id = base;
  rec.exponent = cls.exponent;
  rec.serial = next_serial_++;
  rec.placement = where;
  auto [it, inserted] = records_.insert_or_assign(base, std::move(rec));
  live_ranges_[base] = it->second.end();
  return it->second;
}

void SimSpace::write_word(uint64_t addr, SimValue v) {
  if (addr & 7) {
    throw SimError(ErrorKind::WildStore, "unaligned word address");
  }
  if (!in_stack(addr) && !in_global(addr) && container_of(addr) == nullptr) {
    throw SimError(ErrorKind::WildStore,
                   "store outside stack, global and live heap");
  }
  words_[addr] = v;
}

std::optional<SimValue> SimSpace::read_word(uint64_t addr) const {
  if (addr & 7) {
    throw SimError(ErrorKind::WildStore, "unaligned word address");
  }
  auto it = words_.find(addr);
  if (it != words_.end()) return it->second;
  if (container_of(addr) != nullptr) return SimValue{ValueKind::Data, 0};
  return std::nullopt;
}

const ObjectRecord* SimSpace::container_of(uint64_t addr) const {
  auto it = live_ranges_.upper_bound(addr);
  if (it == live_ranges_.begin()) return nullptr;
  --it;
  if (addr >= it->second) return nullptr;
  auto rit = records_.find(it->first);
  return rit == records_.end() ? nullptr : &rit->second;
}

ObjectRecord* SimSpace::container_of(uint64_t addr) {
  return const_cast<ObjectRecord*>(
      static_cast<const SimSpace*>(this)->container_of(addr));
}

ObjectRecord* SimSpace::find(uint64_t id) {
  auto it = records_.find(id);
  return it == records_.end() ? nullptr : &it->second;
}

const ObjectRecord* SimSpace::find(uint64_t id) const {
  auto it = records_.find(id);
  return it == records_.end() ? nullptr : &it->second;
}

void SimSpace::release_range(ObjectRecord& rec) {
  if (rec.state == ObjState::Released) {
    throw SimError(ErrorKind::AccountingBug, "double release of a range");
  }
  uint64_t word_count = rec.size() / 8;
  if (word_count < words_.size()) {
    for (uint64_t addr = rec.id; addr < rec.end(); addr += 8) {
      words_.erase(addr);
    }
  } else {
    // Huge object: one pass over the (sparse) word map is cheaper than
    // touching every address in the range.
    std::erase_if(words_, [&](const auto& kv) {
      return kv.first >= rec.id && kv.first < rec.end();
    });
  }
  live_ranges_.erase(rec.id);
  free_ranges_[{static_cast<uint8_t>(rec.placement), rec.exponent}].insert(rec.id);
  rec.state = ObjState::Released;
}

}  // namespace dangsim
