#include "dangsim/engine.hpp"

#include <algorithm>
#include <random>

namespace dangsim {

namespace {
uint8_t draw_sign(uint64_t seed) {
  std::mt19937_64 rng(seed);
  return static_cast<uint8_t>(1 + rng() % 255);
}
}  // namespace

Engine::Engine(EngineConfig cfg)
    : cfg_(cfg),
      space_(cfg.direct_bits),
      table_(logs_, TableConfig{cfg.direct_bits, cfg.hash_bits, draw_sign(cfg.seed)}),
      cache_(CacheConfig{cfg.cache_bits}),
      reaper_(space_, table_, logs_, cache_, cfg.compression,
              ReaperConfig{cfg.period_threshold, cfg.oracle_check}, stats_) {
  if (cfg_.inject_hit_rate > 0.0) {
    cache_.set_fault_injection(cfg_.inject_hit_rate, cfg_.seed ^ 0x1CEB00DA);
  }
}

void Engine::on_store(uint64_t loc, SimValue value) {
  space_.write_word(loc, value);
  if (value.kind != ValueKind::Pointer) return;

  uint64_t id = id_of(TaggedWord{value.word});
  const ObjectRecord* rec = space_.find(id);
  if (rec == nullptr || rec->state == ObjState::Released) return;  // stale value

  ++stats_.n_ptr_stores;
  ++stats_.verifying;
  uint64_t key = LogCache::loc_key(space_, loc, cfg_.compression);
  if (cache_.probe_and_fill(id, key) == LogCache::Probe::Hit) {
    ++stats_.dup_hits;
    return;
  }
  ++stats_.searching;
  auto log = table_.lookup(id);
  if (!log) {
    throw SimError(ErrorKind::AccountingBug,
                   "live object missing from the address table");
  }
  logs_.append(*log, LogEntry{entry_kind(cfg_.compression), key});
  ++stats_.n_logged;
  ++stats_.logging;
}

TaggedWord Engine::allocate(uint64_t size, Placement where) {
  ObjectRecord& rec = space_.allocate(size, where);
  rec.log = table_.register_object(rec.id).log;
  ++stats_.n_obj;
  return space_.pointer_to(rec);
}

FreeResult Engine::free_ptr(TaggedWord ptr) {
  ++stats_.n_free_calls;
  return reaper_.on_free(ptr);
}

TaggedWord Engine::on_realloc(TaggedWord old_ptr, uint64_t new_size) {
  uint64_t old_id = id_of(old_ptr);
  const ObjectRecord* old_rec = space_.find(old_id);
  if (old_rec == nullptr) {
    throw SimError(ErrorKind::InvalidFree, "realloc of an unknown id");
  }
  uint64_t old_base = old_rec->id;
  uint64_t old_size = old_rec->size();
  Placement where = old_rec->placement;

  TaggedWord fresh = allocate(new_size, where);
  uint64_t fresh_base = id_of(fresh);
  uint64_t copy_bytes = std::min(old_size, space_.find(fresh_base)->size());
  for (uint64_t off = 0; off < copy_bytes; off += 8) {
    auto value = space_.read_word(old_base + off);
    if (!value) continue;  // both ranges are implicitly zero-filled
    on_store(fresh_base + off, *value);
  }
  free_ptr(old_ptr);
  return fresh;
}

const Engine::Binding& Engine::binding(const std::string& name, size_t index,
                                       uint32_t line) const {
  auto it = names_.find(name);
  if (it == names_.end()) {
    trace_fail(index, line, "unbound name '" + name + "'");
  }
  return it->second;
}

uint64_t Engine::resolve_loc(const Loc& loc, size_t index, uint32_t line) const {
  switch (loc.kind) {
    case Loc::Kind::Stack:
      return SimSpace::kStackBase + 8 * loc.slot;
    case Loc::Kind::Global:
      return SimSpace::kGlobalBase + 8 * loc.slot;
    case Loc::Kind::Object: {
      const Binding& b = binding(loc.name, index, line);
      if (loc.offset >= (uint64_t{1} << b.ptr.tag())) {
        trace_fail(index, line, "offset beyond the object's size class");
      }
      if (loc.offset & 7) {
        trace_fail(index, line, "location offset must be word aligned");
      }
      return strip(b.ptr) + loc.offset;
    }
  }
  trace_fail(index, line, "bad location");
}

SimValue Engine::resolve_value(const PtrExpr& e, size_t index,
                               uint32_t line) const {
  if (e.is_null) return SimValue{ValueKind::Data, 0};
  const Binding& b = binding(e.name, index, line);
  if (e.offset >= (uint64_t{1} << b.ptr.tag())) {
    trace_fail(index, line, "offset beyond the object's size class");
  }
  // Interior pointers are first-class: any offset below the class size
  // truncates back to the same ID.
  return SimValue{ValueKind::Pointer, (b.ptr + e.offset).raw};
}

void Engine::trace_fail(size_t index, uint32_t line, const std::string& msg,
                        std::optional<ErrorKind> cause) const {
  throw TraceError(index, line, msg, cause);
}

void Engine::exec(const TraceEvent& ev, size_t index) {
  uint32_t line = ev.line;

  if (const auto* e = std::get_if<AllocEvent>(&ev.op)) {
    Placement where =
        (e->high || cfg_.default_high) ? Placement::High : Placement::Low;
    TaggedWord ptr = allocate(e->size, where);
    names_[e->name] = Binding{ptr, space_.find(id_of(ptr))->serial};
  } else if (const auto* e = std::get_if<StoreEvent>(&ev.op)) {
    on_store(resolve_loc(e->loc, index, line),
             resolve_value(e->value, index, line));
  } else if (const auto* e = std::get_if<StoreDataEvent>(&ev.op)) {
    on_store(resolve_loc(e->loc, index, line),
             SimValue{ValueKind::Data, e->value});
  } else if (const auto* e = std::get_if<LoadEvent>(&ev.op)) {
    uint64_t addr = resolve_loc(e->loc, index, line);
    if (space_.in_heap(addr)) {
      const ObjectRecord* rec = space_.container_of(addr);
      if (rec == nullptr) {
        trace_fail(index, line, "load from a released heap range");
      }
      if (rec->state == ObjState::UserFreed) ++stats_.n_uaf_loads;
    }
    space_.read_word(addr);
  } else if (const auto* e = std::get_if<FreeEvent>(&ev.op)) {
    SimValue v = resolve_value(e->ptr, index, line);
    if (v.kind != ValueKind::Pointer) return;  // free(null) is a no-op
    free_ptr(TaggedWord{v.word});
  } else if (const auto* e = std::get_if<ReallocEvent>(&ev.op)) {
    const Binding& b = binding(e->old_name, index, line);
    TaggedWord fresh = on_realloc(b.ptr, e->size);
    names_[e->new_name] = Binding{fresh, space_.find(id_of(fresh))->serial};
  } else if (std::holds_alternative<PeriodEvent>(ev.op)) {
    reaper_.periodical_free();
  } else if (std::holds_alternative<FlushEvent>(ev.op)) {
    reaper_.flush_all();
  } else if (const auto* e = std::get_if<ExpectEvent>(&ev.op)) {
    const Binding& b = binding(e->name, index, line);
    const ObjectRecord* rec = space_.find(id_of(b.ptr));
    bool resident = rec != nullptr && rec->serial == b.serial &&
                    rec->state != ObjState::Released;
    if (e->released && resident) {
      trace_fail(index, line, "expected '" + e->name + "' released, still resident");
    }
    if (!e->released && !resident) {
      trace_fail(index, line, "expected '" + e->name + "' live, already released");
    }
  }
}

StatsReport Engine::run(const std::vector<TraceEvent>& events) {
  for (size_t i = 0; i < events.size(); ++i) {
    try {
      exec(events[i], i);
    } catch (const TraceError&) {
      throw;
    } catch (const SimError& err) {
      trace_fail(i, events[i].line, err.what(), err.kind());
    }
  }
  if (cfg_.final_flush) reaper_.flush_all();

  stats_.n_retained_at_end = static_cast<uint64_t>(retained_freed().size());
  if (cfg_.oracle_check) {
    auto retained = retained_freed();
    auto referenced = still_referenced_freed(space_);
    if (retained != referenced) {
      throw TraceError(events.size(), 0,
                       "retained set diverges from the sweep oracle",
                       ErrorKind::SettlementMismatch);
    }
  }
  return stats_;
}

StatsReport Engine::run_text(std::string_view text) {
  return run(parse_trace(text));
}

std::vector<ObjKey> Engine::retained_freed() const {
  std::vector<ObjKey> out;
  for (const auto& [id, rec] : space_.records()) {
    if (rec.state == ObjState::UserFreed) out.push_back({rec.id, rec.serial});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dangsim
