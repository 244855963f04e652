#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dangsim/oracle.hpp"
#include "dangsim/reaper.hpp"
#include "dangsim/trace.hpp"

namespace dangsim {

struct EngineConfig {
  uint32_t direct_bits = 32;
  uint32_t hash_bits = 20;
  uint32_t cache_bits = 20;
  Compression compression{};
  uint64_t period_threshold = 1000;
  uint64_t seed = 1;
  bool oracle_check = false;
  bool final_flush = true;
  bool default_high = false;       // place unmarked allocs in the hash region
  double inject_hit_rate = 0.0;    // test hook, see LogCache
};

// Event dispatcher: every store is tracked through cache -> table -> log,
// every free goes through verification and delayed release. Deterministic
// given (trace, config): the seed only feeds the table sign and the
// optional fault injector.
class Engine {
 public:
  explicit Engine(EngineConfig cfg = {});

  // Word write plus pointer tracking. The probe runs before any table
  // lookup; a hit therefore performs no search at all.
  void on_store(uint64_t loc, SimValue value);

  TaggedWord allocate(uint64_t size, Placement where);
  FreeResult free_ptr(TaggedWord ptr);

  // malloc + word-wise copy + free. Copied pointer words re-enter tracking
  // at their new locations; a still-referenced old object is deferred, not
  // released.
  TaggedWord on_realloc(TaggedWord old_ptr, uint64_t new_size);

  StatsReport run(const std::vector<TraceEvent>& events);
  StatsReport run_text(std::string_view text);

  // User-freed objects still resident, sorted. After a flush this must
  // match the oracle's still-referenced set exactly.
  std::vector<ObjKey> retained_freed() const;

  SimSpace& space() { return space_; }
  AddrTable& table() { return table_; }
  LogStore& logs() { return logs_; }
  LogCache& cache() { return cache_; }
  Reaper& reaper() { return reaper_; }
  const StatsReport& stats() const { return stats_; }
  const EngineConfig& config() const { return cfg_; }

 private:
  struct Binding {
    TaggedWord ptr;
    uint64_t serial = 0;
  };

  void exec(const TraceEvent& ev, size_t index);
  uint64_t resolve_loc(const Loc& loc, size_t index, uint32_t line) const;
  SimValue resolve_value(const PtrExpr& e, size_t index, uint32_t line) const;
  const Binding& binding(const std::string& name, size_t index,
                         uint32_t line) const;
  [[noreturn]] void trace_fail(size_t index, uint32_t line,
                               const std::string& msg,
                               std::optional<ErrorKind> cause = {}) const;

  EngineConfig cfg_;
  SimSpace space_;
  LogStore logs_;
  AddrTable table_;
  LogCache cache_;
  StatsReport stats_;
  Reaper reaper_;
  std::unordered_map<std::string, Binding> names_;
};

}  // namespace dangsim
