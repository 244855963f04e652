#include "dangsim/oracle.hpp"

#include <algorithm>
#include <unordered_set>

namespace dangsim {

// Every explicitly stored word is mapped: stores land only in the stack and
// global windows or inside non-Released objects, and releasing a range
// erases its words. Implicitly zero-filled object words can never hold a
// pointer, so scanning the explicit map scans all mapped words that matter.

SweepResult sweep(const SimSpace& space, uint64_t id) {
  SweepResult result{id, {}};
  for (const auto& [addr, value] : space.words()) {
    if (value.kind == ValueKind::Pointer && id_of(TaggedWord{value.word}) == id) {
      result.addrs.push_back(addr);
    }
  }
  std::sort(result.addrs.begin(), result.addrs.end());
  return result;
}

bool check_release(const SimSpace& space, uint64_t id) {
  for (const auto& [addr, value] : space.words()) {
    if (value.kind == ValueKind::Pointer && id_of(TaggedWord{value.word}) == id) {
      return false;
    }
  }
  return true;
}

std::vector<ObjKey> still_referenced_freed(const SimSpace& space) {
  std::unordered_set<uint64_t> referenced;
  for (const auto& [addr, value] : space.words()) {
    if (value.kind == ValueKind::Pointer) {
      referenced.insert(id_of(TaggedWord{value.word}));
    }
  }
  std::vector<ObjKey> out;
  for (const auto& [id, rec] : space.records()) {
    if (rec.state == ObjState::UserFreed && referenced.contains(id)) {
      out.push_back({rec.id, rec.serial});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dangsim
