#include "dangsim/reaper.hpp"

#include <algorithm>
#include <unordered_set>

#include "dangsim/oracle.hpp"

namespace dangsim {

Reaper::Reaper(SimSpace& space, AddrTable& table, LogStore& logs,
               LogCache& cache, Compression compression, ReaperConfig cfg,
               StatsReport& stats)
    : space_(space),
      table_(table),
      logs_(logs),
      cache_(cache),
      compression_(compression),
      cfg_(cfg),
      stats_(stats) {}

std::vector<uint64_t> Reaper::verify_object(const ObjectRecord& rec) const {
  std::vector<uint64_t> refs;
  std::unordered_set<uint64_t> seen;
  const Log& log = logs_.get(rec.log);
  for (const auto& lane : log.lanes) {
    for (const LogEntry& entry : lane) {
      for (uint64_t addr : expand(space_, entry, compression_)) {
        auto value = space_.read_word(addr);
        if (!value || value->kind != ValueKind::Pointer) continue;
        if (id_of(TaggedWord{value->word}) != rec.id) continue;
        if (seen.insert(addr).second) refs.push_back(addr);
      }
    }
  }
  return refs;
}

ObjectRecord& Reaper::parked(uint64_t id) const {
  ObjectRecord* rec = space_.find(id);
  if (rec == nullptr || rec->state != ObjState::UserFreed) {
    throw SimError(ErrorKind::AccountingBug,
                   "parked object is not in UserFreed state");
  }
  return *rec;
}

FreeResult Reaper::on_free(TaggedWord ptr) {
  ObjectRecord* rec = space_.find(id_of(ptr));
  if (rec == nullptr) {
    throw SimError(ErrorKind::InvalidFree, "free of an unknown id");
  }
  if (rec->state != ObjState::Live) {
    ++stats_.n_double_free;
    return {FreeOutcome::DoubleFree, 0};
  }
  rec->state = ObjState::UserFreed;
  return classify_freed(*rec, nullptr, true);
}

FreeResult Reaper::classify_freed(ObjectRecord& rec,
                                  std::vector<uint64_t>* cascade,
                                  bool allow_period_trigger) {
  ++stats_.handling;
  std::vector<uint64_t> refs = verify_object(rec);

  if (refs.empty()) {
    if (cascade != nullptr) {
      release_one(rec, *cascade);
    } else {
      release_now(rec);
    }
    return {FreeOutcome::Released, 0};
  }

  bool all_heap = std::all_of(refs.begin(), refs.end(), [&](uint64_t a) {
    return space_.container_of(a) != nullptr;
  });
  if (all_heap) {
    uint64_t lowest = *std::min_element(refs.begin(), refs.end());
    ObjectRecord* root = space_.container_of(lowest);
    root->deferred.push_back(rec.id);
    return {FreeOutcome::DeferredHeap, root->id};
  }

  // Mixed or stack/global referrers: the period list is re-checked
  // unconditionally, so it is the conservative bucket.
  period_list_.push_back(rec.id);
  if (allow_period_trigger && period_list_.size() > cfg_.period_threshold) {
    periodical_free();
  }
  return {FreeOutcome::DeferredPeriod, 0};
}

void Reaper::release_one(ObjectRecord& rec, std::vector<uint64_t>& cascade) {
  if (cfg_.oracle_check && !check_release(space_, rec.id)) {
    throw SimError(ErrorKind::PrematureFree,
                   "release while a mapped word still references the object");
  }
  std::vector<uint64_t> dependents = std::move(rec.deferred);
  rec.deferred.clear();
  bool log_released = table_.unregister_object(rec.id);
  if (log_released) cache_.invalidate_all();
  space_.release_range(rec);
  ++stats_.n_released;
  cascade.insert(cascade.end(), dependents.begin(), dependents.end());
}

void Reaper::drain(std::vector<uint64_t>& cascade) {
  for (size_t i = 0; i < cascade.size(); ++i) {
    classify_freed(parked(cascade[i]), &cascade, false);
  }
}

void Reaper::release_now(ObjectRecord& rec) {
  std::vector<uint64_t> cascade;
  release_one(rec, cascade);
  drain(cascade);
}

uint64_t Reaper::periodical_free() {
  std::deque<uint64_t> snapshot = std::move(period_list_);
  period_list_.clear();
  uint64_t released = 0;
  for (uint64_t id : snapshot) {
    // Threshold re-triggering is suppressed during the walk itself.
    if (classify_freed(parked(id), nullptr, false).outcome ==
        FreeOutcome::Released) {
      ++released;
    }
  }
  return released;
}

void Reaper::flush_all() {
  for (;;) {
    uint64_t released = periodical_free();

    // Re-dispatch dependents parked under roots the user never freed (or
    // freed but retained); a root's own release drains its list itself.
    std::vector<uint64_t> roots;
    for (const auto& [id, rec] : space_.records()) {
      if (rec.state != ObjState::Released && !rec.deferred.empty()) {
        roots.push_back(id);
      }
    }
    std::sort(roots.begin(), roots.end());
    for (uint64_t root_id : roots) {
      ObjectRecord* root = space_.find(root_id);
      if (root == nullptr || root->state == ObjState::Released) continue;
      std::vector<uint64_t> kids = std::move(root->deferred);
      root->deferred.clear();
      for (uint64_t kid : kids) {
        if (classify_freed(parked(kid), nullptr, false).outcome ==
            FreeOutcome::Released) {
          ++released;
        }
      }
    }
    if (released == 0) break;
  }
}

}  // namespace dangsim
