#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dangsim/simspace.hpp"

namespace dangsim {

enum class Mode : uint8_t { Off, Block, Full };

struct Compression {
  Mode mode = Mode::Off;
  uint32_t block_words = 0;  // power of two; Block mode only

  uint64_t block_bytes() const { return uint64_t{8} * block_words; }
  static Compression parse(const std::string& text);  // off | block:<words> | full
  std::string to_string() const;
};

enum class EntryKind : uint8_t { RawAddr, BlockKey, ContainerID };

// One recorded dangling-pointer candidate location. The key is a raw word
// address, a block-aligned address, or a container object ID depending on
// the compression mode at store time.
struct LogEntry {
  EntryKind kind = EntryKind::RawAddr;
  uint64_t key = 0;
  constexpr bool operator==(const LogEntry&) const = default;
};

// Append-only log shared by every object mapped to one table entry. nums
// counts the sharers that are not yet Released; the lanes mirror the
// per-thread layout even though this engine runs a single lane.
struct Log {
  uint32_t nums = 1;
  std::vector<std::vector<LogEntry>> lanes = std::vector<std::vector<LogEntry>>(1);
  uint64_t entries = 0;
};

class LogStore {
 public:
  LogId create();
  Log& get(LogId id);
  const Log& get(LogId id) const;
  bool alive(LogId id) const;
  void append(LogId id, LogEntry e);
  // Drops all lanes. Requires every sharer released (nums == 0).
  void release(LogId id);
  size_t live_logs() const { return live_; }

 private:
  std::vector<std::unique_ptr<Log>> logs_;
  size_t live_ = 0;
};

EntryKind entry_kind(const Compression& c);

// All word addresses an entry may cover right now. A container entry whose
// object has been released covers nothing: those words no longer exist.
std::vector<uint64_t> expand(const SimSpace& space, const LogEntry& e,
                             const Compression& c);

}  // namespace dangsim
