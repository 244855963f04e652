#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dangsim/logstore.hpp"

namespace dangsim {

struct TableConfig {
  uint32_t direct_bits = 32;  // N: direct/hash boundary exponent
  uint32_t hash_bits = 20;    // log2 of hash-table entry count
  uint8_t program_sign = 1;   // per-run random nonzero 8-bit sign
};

// ID -> log map. IDs below 2^N index a lazily paged direct table; IDs above
// hash into a sign-tagged table where colliding objects share one log.
class AddrTable {
 public:
  AddrTable(LogStore& logs, TableConfig cfg);

  struct RegisterResult {
    LogId log = kNoLog;
    bool shared = false;
  };

  RegisterResult register_object(uint64_t id);
  std::optional<LogId> lookup(uint64_t id) const;
  // Returns true when this was the last sharer and the log was released.
  bool unregister_object(uint64_t id);

  uint64_t hash_index(uint64_t id) const;
  size_t direct_pages() const { return pages_.size(); }
  const TableConfig& config() const { return cfg_; }

 private:
  struct Entry {
    uint8_t sign = 0;  // 0 = empty
    LogId log = kNoLog;
  };
  static constexpr uint32_t kPageBits = 16;
  using Page = std::array<Entry, size_t{1} << kPageBits>;

  bool is_direct(uint64_t id) const {
    return id < (uint64_t{1} << cfg_.direct_bits);
  }
  Entry* direct_slot(uint64_t id, bool materialize);
  const Entry* direct_slot(uint64_t id) const;

  LogStore& logs_;
  TableConfig cfg_;
  std::unordered_map<uint64_t, std::unique_ptr<Page>> pages_;
  std::vector<Entry> hash_;
};

}  // namespace dangsim
