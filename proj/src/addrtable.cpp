#include "dangsim/addrtable.hpp"

namespace dangsim {

AddrTable::AddrTable(LogStore& logs, TableConfig cfg) : logs_(logs), cfg_(cfg) {
  if (cfg_.direct_bits < 16 || cfg_.direct_bits > 46) {
    throw SimError(ErrorKind::SizeOutOfRange, "direct bits outside [16, 46]");
  }
  if (cfg_.hash_bits < 8 || cfg_.hash_bits > 30) {
    throw SimError(ErrorKind::SizeOutOfRange, "hash bits outside [8, 30]");
  }
  if (cfg_.program_sign == 0) {
    throw SimError(ErrorKind::AccountingBug, "program sign must be nonzero");
  }
  hash_.resize(size_t{1} << cfg_.hash_bits);
}

uint64_t AddrTable::hash_index(uint64_t id) const {
  // Fibonacci multiplicative hash of the minimum-alignment-stripped ID.
  return ((id >> 4) * 0x9E3779B97F4A7C15ull) >> (64 - cfg_.hash_bits);
}

AddrTable::Entry* AddrTable::direct_slot(uint64_t id, bool materialize) {
  uint64_t index = id >> 4;
  uint64_t page_no = index >> kPageBits;
  auto it = pages_.find(page_no);
  if (it == pages_.end()) {
    if (!materialize) return nullptr;
    it = pages_.emplace(page_no, std::make_unique<Page>()).first;
  }
  return &(*it->second)[index & ((size_t{1} << kPageBits) - 1)];
}

const AddrTable::Entry* AddrTable::direct_slot(uint64_t id) const {
  uint64_t index = id >> 4;
  auto it = pages_.find(index >> kPageBits);
  if (it == pages_.end()) return nullptr;
  return &(*it->second)[index & ((size_t{1} << kPageBits) - 1)];
}

AddrTable::RegisterResult AddrTable::register_object(uint64_t id) {
  if (is_direct(id)) {
    Entry* slot = direct_slot(id, true);
    if (slot->sign != 0) {
      throw SimError(ErrorKind::DuplicateID,
                     "direct slot already bound to a live object");
    }
    slot->sign = cfg_.program_sign;
    slot->log = logs_.create();
    return {slot->log, false};
  }
  Entry& entry = hash_[hash_index(id)];
  if (entry.sign == 0) {
    entry.sign = cfg_.program_sign;
    entry.log = logs_.create();
    return {entry.log, false};
  }
  ++logs_.get(entry.log).nums;
  return {entry.log, true};
}

std::optional<LogId> AddrTable::lookup(uint64_t id) const {
  if (is_direct(id)) {
    const Entry* slot = direct_slot(id);
    if (slot == nullptr || slot->sign == 0) return std::nullopt;
    return slot->log;
  }
  const Entry& entry = hash_[hash_index(id)];
  if (entry.sign == 0) return std::nullopt;
  return entry.log;
}

bool AddrTable::unregister_object(uint64_t id) {
  Entry* entry = is_direct(id) ? direct_slot(id, false) : &hash_[hash_index(id)];
  if (entry == nullptr || entry->sign == 0) {
    throw SimError(ErrorKind::AccountingBug, "unregister of an unmapped id");
  }
  Log& log = logs_.get(entry->log);
  if (log.nums == 0) {
    throw SimError(ErrorKind::AccountingBug, "sharer count underflow");
  }
  if (--log.nums > 0) return false;
  logs_.release(entry->log);
  entry->sign = 0;
  entry->log = kNoLog;
  return true;
}

}  // namespace dangsim
