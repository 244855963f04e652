#include "dangsim/logstore.hpp"

#include <bit>

namespace dangsim {

Compression Compression::parse(const std::string& text) {
  if (text == "off") return {Mode::Off, 0};
  if (text == "full") return {Mode::Full, 0};
  if (text.rfind("block:", 0) == 0) {
    uint64_t words = 0;
    try {
      size_t pos = 0;
      words = std::stoull(text.substr(6), &pos, 0);
      if (pos != text.size() - 6) words = 0;
    } catch (const std::exception&) {
      words = 0;
    }
    if (words == 0 || words > (uint64_t{1} << 20) ||
        !std::has_single_bit(words)) {
      throw SimError(ErrorKind::SizeOutOfRange,
                     "block words must be a power of two in [1, 2^20]");
    }
    return {Mode::Block, static_cast<uint32_t>(words)};
  }
  throw SimError(ErrorKind::SizeOutOfRange,
                 "compression must be off, block:<words> or full");
}

std::string Compression::to_string() const {
  switch (mode) {
    case Mode::Off:
      return "off";
    case Mode::Block:
      return "block:" + std::to_string(block_words);
    case Mode::Full:
      return "full";
  }
  return "off";
}

LogId LogStore::create() {
  logs_.push_back(std::make_unique<Log>());
  ++live_;
  return static_cast<LogId>(logs_.size() - 1);
}

Log& LogStore::get(LogId id) {
  if (id >= logs_.size() || !logs_[id]) {
    throw SimError(ErrorKind::UseAfterRelease, "log handle is not alive");
  }
  return *logs_[id];
}

const Log& LogStore::get(LogId id) const {
  if (id >= logs_.size() || !logs_[id]) {
    throw SimError(ErrorKind::UseAfterRelease, "log handle is not alive");
  }
  return *logs_[id];
}

bool LogStore::alive(LogId id) const {
  return id < logs_.size() && logs_[id] != nullptr;
}

void LogStore::append(LogId id, LogEntry e) {
  Log& log = get(id);
  auto& lane = log.lanes.front();
  if (lane.capacity() == 0) lane.reserve(4);
  lane.push_back(e);
  ++log.entries;
}

void LogStore::release(LogId id) {
  Log& log = get(id);
  if (log.nums != 0) {
    throw SimError(ErrorKind::AccountingBug,
                   "releasing a log with live sharers");
  }
  logs_[id].reset();
  --live_;
}

EntryKind entry_kind(const Compression& c) {
  switch (c.mode) {
    case Mode::Off:
      return EntryKind::RawAddr;
    case Mode::Block:
      return EntryKind::BlockKey;
    case Mode::Full:
      return EntryKind::ContainerID;
  }
  return EntryKind::RawAddr;
}

std::vector<uint64_t> expand(const SimSpace& space, const LogEntry& e,
                             const Compression& c) {
  switch (e.kind) {
    case EntryKind::RawAddr:
      return {e.key};
    case EntryKind::BlockKey: {
      if (c.mode != Mode::Block) {
        throw SimError(ErrorKind::AccountingBug,
                       "block entry without block compression");
      }
      std::vector<uint64_t> out;
      out.reserve(c.block_words);
      for (uint64_t a = e.key; a < e.key + c.block_bytes(); a += 8) {
        out.push_back(a);
      }
      return out;
    }
    case EntryKind::ContainerID: {
      if (e.key >= SimSpace::kStackBase) return {e.key};  // stack/global fallback
      const ObjectRecord* rec = space.find(e.key);
      if (rec == nullptr || rec->state == ObjState::Released) return {};
      std::vector<uint64_t> out;
      out.reserve(rec->size() / 8);
      for (uint64_t a = rec->id; a < rec->end(); a += 8) {
        out.push_back(a);
      }
      return out;
    }
  }
  return {};
}

}  // namespace dangsim
