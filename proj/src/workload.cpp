#include "dangsim/workload.hpp"

#include <random>

#include "dangsim/error.hpp"

namespace dangsim {

Pattern parse_pattern(const std::string& text) {
  if (text == "compute-intensive") return Pattern::ComputeIntensive;
  if (text == "mem-intensive") return Pattern::MemIntensive;
  throw SimError(ErrorKind::SizeOutOfRange,
                 "pattern must be compute-intensive or mem-intensive");
}

std::string to_string(Pattern p) {
  return p == Pattern::ComputeIntensive ? "compute-intensive" : "mem-intensive";
}

namespace {

class TraceWriter {
 public:
  explicit TraceWriter(uint64_t seed) : rng_(seed) {}

  uint64_t pick(uint64_t n) { return rng_() % n; }
  bool chance(uint64_t one_in) { return rng_() % one_in == 0; }

  void line(const std::string& s) {
    out_ += s;
    out_ += '\n';
  }
  void alloc(const std::string& name, uint64_t size, bool high) {
    line("alloc " + name + " " + std::to_string(size) + (high ? " high" : ""));
  }
  std::string slot_loc(const std::string& container, uint64_t word) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "+0x%llx",
                  static_cast<unsigned long long>(word * 8));
    return container + buf;
  }

  std::string take() { return std::move(out_); }

 private:
  std::mt19937_64 rng_;
  std::string out_;
};

std::string generate_mem(const WorkloadSpec& spec) {
  TraceWriter w(spec.seed);
  const uint64_t pointees = std::max<uint64_t>(1, spec.objects / 4);
  const uint64_t containers = std::max<uint64_t>(1, spec.objects - pointees);
  const uint64_t container_words = 512;  // 4 KiB containers

  std::vector<std::string> pointee(pointees);
  std::vector<bool> pointee_freed(pointees, false);
  std::vector<std::string> alive;

  w.line("# mem-intensive workload: few large containers, small pointee set,");
  w.line("# pointers scattered across many offsets of the same containers");
  for (uint64_t i = 0; i < pointees; ++i) {
    pointee[i] = "p" + std::to_string(i);
    w.alloc(pointee[i], 16 << w.pick(3), w.chance(4));
  }
  for (uint64_t i = 0; i < containers; ++i) {
    alive.push_back("c" + std::to_string(i));
    w.alloc(alive.back(), container_words * 8, w.chance(4));
  }

  auto free_one_pointee = [&] {
    uint64_t tries = pointees;
    while (tries-- > 0) {
      uint64_t k = w.pick(pointees);
      if (pointee_freed[k]) continue;
      pointee_freed[k] = true;
      w.line("free " + pointee[k]);
      return;
    }
  };

  for (uint64_t i = 0; i < spec.stores; ++i) {
    if (i == spec.stores / 4 && pointees > 1) {
      // grow one pointee; its copied words re-enter tracking
      uint64_t k = w.pick(pointees);
      if (!pointee_freed[k]) {
        std::string grown = pointee[k] + "r";
        w.line("realloc " + pointee[k] + " " + grown + " 96");
        pointee[k] = grown;
      }
    }
    if (i == spec.stores / 3) free_one_pointee();
    if (i == spec.stores / 2 && alive.size() > 1) {
      uint64_t k = w.pick(alive.size());
      w.line("free " + alive[k]);
      alive.erase(alive.begin() + static_cast<ptrdiff_t>(k));
    }
    if (i == (2 * spec.stores) / 3) {
      free_one_pointee();
      w.line("period");
    }

    if (w.chance(128)) {
      w.line("store stack:" + std::to_string(w.pick(1 << 17)) + " " +
             pointee[w.pick(pointees)]);
    } else if (w.chance(256)) {
      w.line("storei " + w.slot_loc(alive[w.pick(alive.size())],
                                    w.pick(container_words)) +
             " 0");
    } else if (w.chance(96)) {
      w.line("load " + w.slot_loc(alive[w.pick(alive.size())],
                                  w.pick(container_words)));
    } else {
      w.line("store " + w.slot_loc(alive[w.pick(alive.size())],
                                   w.pick(container_words)) +
             " " + pointee[w.pick(pointees)]);
    }
  }

  // settle: kill a few references, free the rest of the pointee set
  for (uint64_t i = 0; i < std::min<uint64_t>(containers * 4, 64); ++i) {
    w.line("storei " + w.slot_loc(alive[w.pick(alive.size())],
                                  w.pick(container_words)) +
           " 0");
  }
  for (uint64_t k = 0; k < pointees; ++k) {
    if (!pointee_freed[k] && w.chance(2)) {
      pointee_freed[k] = true;
      w.line("free " + pointee[k]);
    }
  }
  w.line("flush");
  return w.take();
}

std::string generate_compute(const WorkloadSpec& spec) {
  TraceWriter w(spec.seed);
  const uint64_t objects = spec.objects;

  std::vector<std::string> name(objects);
  std::vector<bool> freed(objects, false);
  std::vector<std::string> used_slots;

  w.line("# compute-intensive workload: many small objects, every pointer");
  w.line("# stored once to a distinct stack or global slot");
  for (uint64_t i = 0; i < objects; ++i) {
    name[i] = "o" + std::to_string(i);
    w.alloc(name[i], 16 << w.pick(3), w.chance(4));
  }

  uint64_t slot_counter = 0;
  auto fresh_slot = [&] {
    uint64_t n = slot_counter++;
    std::string loc = (n & 1 ? "global:" : "stack:") +
                      std::to_string((n >> 1) % (uint64_t{1} << 17));
    used_slots.push_back(loc);
    return loc;
  };

  for (uint64_t i = 0; i < spec.stores; ++i) {
    if (i == spec.stores / 2 && objects > 1) {
      uint64_t k = w.pick(objects);
      if (!freed[k]) {
        std::string grown = name[k] + "r";
        w.line("realloc " + name[k] + " " + grown + " 80");
        name[k] = grown;
      }
    }
    if (i == (2 * spec.stores) / 3) w.line("period");

    if (!used_slots.empty() && w.chance(31)) {
      w.line("storei " + used_slots[w.pick(used_slots.size())] + " 0");
    } else if (!used_slots.empty() && w.chance(41)) {
      w.line("load " + used_slots[w.pick(used_slots.size())]);
    } else {
      w.line("store " + fresh_slot() + " " + name[w.pick(objects)]);
    }

    // interleave frees so roughly half the objects die mid-run
    if (w.chance(std::max<uint64_t>(2, (2 * spec.stores) / objects))) {
      uint64_t k = w.pick(objects);
      if (!freed[k]) {
        freed[k] = true;
        w.line("free " + name[k]);
      }
    }
  }

  for (uint64_t k = 0; k < objects; ++k) {
    if (!freed[k] && w.chance(3)) {
      freed[k] = true;
      w.line("free " + name[k]);
    }
  }
  w.line("flush");
  return w.take();
}

}  // namespace

std::string generate(const WorkloadSpec& spec) {
  if (spec.objects == 0 || spec.stores == 0) {
    throw SimError(ErrorKind::SizeOutOfRange, "objects and stores must be >= 1");
  }
  return spec.pattern == Pattern::MemIntensive ? generate_mem(spec)
                                               : generate_compute(spec);
}

}  // namespace dangsim
