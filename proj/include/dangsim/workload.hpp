#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dangsim {

enum class Pattern : uint8_t { ComputeIntensive, MemIntensive };

Pattern parse_pattern(const std::string& text);
std::string to_string(Pattern p);

// Synthetic workload shape. Memory-intensive traces hammer many offsets of
// a few large containers with pointers to a small pointee set, the locality
// that makes whole-object compression pay off. Compute-intensive traces
// store each pointer once to a distinct stack or global slot, where
// compression buys nothing.
struct WorkloadSpec {
  Pattern pattern = Pattern::ComputeIntensive;
  uint64_t objects = 1;
  uint64_t stores = 1;
  uint64_t seed = 0;
};

// Deterministic in the spec; same spec gives byte-identical text.
std::string generate(const WorkloadSpec& spec);

// Hand-written use-after-free / double-free scenario traces, each ending in
// expect assertions. Low-heap and hash-region variants.
std::vector<std::pair<std::string, std::string>> cwe416_corpus();

}  // namespace dangsim
