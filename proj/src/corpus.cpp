#include "dangsim/workload.hpp"

// Use-after-free and double-free scenario traces. Every trace ends in
// expect assertions; none of them may abort the run. The *_high variants
// replay the same scenario with objects forced into the hash-mapped region.

namespace dangsim {

namespace {

struct NamedTrace {
  const char* name;
  const char* text;
};

constexpr NamedTrace kCorpus[] = {
    {"uaf_read_stack",
     R"(# read through a dangling pointer: the deferred object keeps its contents
alloc a 48
storei a+0x0 7
store stack:0 a
free a
load a+0x0
expect-live a
storei stack:0 0
flush
expect-released a
)"},
    {"uaf_read_stack_high",
     R"(alloc a 48 high
storei a+0x0 7
store stack:0 a
free a
load a+0x0
expect-live a
storei stack:0 0
flush
expect-released a
)"},
    {"uaf_write_deferred",
     R"(# write through a dangling pointer into a deferred object
alloc a 64
store stack:1 a
free a
storei a+0x8 99
load a+0x8
expect-live a
storei stack:1 0
flush
expect-released a
)"},
    {"uaf_write_deferred_high",
     R"(alloc a 64 high
store stack:1 a
free a
storei a+0x8 99
load a+0x8
expect-live a
storei stack:1 0
flush
expect-released a
)"},
    {"double_free_immediate",
     R"(# second free of an already-released object is counted, not fatal
alloc a 32
free a
expect-released a
free a
expect-released a
)"},
    {"double_free_immediate_high",
     R"(alloc a 32 high
free a
expect-released a
free a
expect-released a
)"},
    {"double_free_deferred",
     R"(# double free while the object is parked in the period list
alloc a 32
store global:0 a
free a
free a
expect-live a
storei global:0 0
flush
expect-released a
)"},
    {"double_free_deferred_high",
     R"(alloc a 32 high
store global:0 a
free a
free a
expect-live a
storei global:0 0
flush
expect-released a
)"},
    {"heap_defer_chain",
     R"(# c waits on b waits on a; releasing a cascades down the chain
alloc a 64
alloc b 64
alloc c 64
store a+0x0 b
store b+0x0 c
free c
free b
free a
expect-released a
expect-released b
expect-released c
)"},
    {"heap_defer_chain_high",
     R"(alloc a 64 high
alloc b 64 high
alloc c 64 high
store a+0x0 b
store b+0x0 c
free c
free b
free a
expect-released a
expect-released b
expect-released c
)"},
    {"heap_defer_live_root",
     R"(# freed object waits on a root the user never frees; an overwrite
# plus flush settles it
alloc r 64
alloc x 32
store r+0x8 x
free x
expect-live x
storei r+0x8 0
flush
expect-released x
expect-live r
)"},
    {"heap_defer_live_root_high",
     R"(alloc r 64 high
alloc x 32 high
store r+0x8 x
free x
expect-live x
storei r+0x8 0
flush
expect-released x
expect-live r
)"},
    {"period_sweep",
     R"(# explicit period pass releases only the list members without references
alloc a 16
alloc b 16
store stack:0 a
store stack:1 b
free a
free b
storei stack:0 0
period
expect-released a
expect-live b
storei stack:1 0
flush
expect-released b
)"},
    {"period_sweep_high",
     R"(alloc a 16 high
alloc b 16 high
store stack:0 a
store stack:1 b
free a
free b
storei stack:0 0
period
expect-released a
expect-live b
storei stack:1 0
flush
expect-released b
)"},
    {"realloc_basic",
     R"(# unreferenced realloc source is released; contents move over
alloc a 32
storei a+0x0 42
realloc a b 64
expect-released a
expect-live b
load b+0x0
free b
expect-released b
)"},
    {"realloc_basic_high",
     R"(alloc a 32 high
storei a+0x0 42
realloc a b 64
expect-released a
expect-live b
load b+0x0
free b
expect-released b
)"},
    {"realloc_referenced",
     R"(# referenced realloc source stays resident until the reference dies
alloc a 32
store stack:0 a
realloc a b 64
expect-live a
expect-live b
storei stack:0 0
flush
expect-released a
free b
expect-released b
)"},
    {"realloc_referenced_high",
     R"(alloc a 32 high
store stack:0 a
realloc a b 64
expect-live a
expect-live b
storei stack:0 0
flush
expect-released a
free b
expect-released b
)"},
    {"realloc_pointer_copy",
     R"(# a pointer field copied by realloc is tracked at its new location
alloc t 16
alloc a 32
store a+0x0 t
realloc a b 64
free t
expect-live t
free b
expect-released b
expect-released t
)"},
    {"realloc_pointer_copy_high",
     R"(alloc t 16 high
alloc a 32 high
store a+0x0 t
realloc a b 64
free t
expect-live t
free b
expect-released b
expect-released t
)"},
    {"interior_pointer_retains",
     R"(# an interior pointer truncates to the same ID and retains the object
alloc a 64
store stack:0 a+0x18
free a
expect-live a
storei stack:0 0
flush
expect-released a
)"},
    {"interior_pointer_retains_high",
     R"(alloc a 64 high
store stack:0 a+0x18
free a
expect-live a
storei stack:0 0
flush
expect-released a
)"},
    {"self_reference",
     R"(# a one-object cycle is never collected
alloc a 32
store a+0x8 a
free a
expect-live a
flush
expect-live a
)"},
    {"self_reference_high",
     R"(alloc a 32 high
store a+0x8 a
free a
expect-live a
flush
expect-live a
)"},
    {"mutual_cycle",
     R"(# two user-freed objects referencing each other stay resident
alloc a 32
alloc b 32
store a+0x0 b
store b+0x0 a
free a
free b
flush
expect-live a
expect-live b
)"},
    {"mutual_cycle_high",
     R"(alloc a 32 high
alloc b 32 high
store a+0x0 b
store b+0x0 a
free a
free b
flush
expect-live a
expect-live b
)"},
    {"global_overwrite_release",
     R"(alloc a 16
store global:5 a
free a
expect-live a
storei global:5 0
flush
expect-released a
)"},
    {"global_overwrite_release_high",
     R"(alloc a 16 high
store global:5 a
free a
expect-live a
storei global:5 0
flush
expect-released a
)"},
    {"free_then_reuse_alias",
     R"(# classic allocator aliasing: a stale free hits the recycled block
alloc a 32
free a
expect-released a
alloc b 32
store stack:0 b
free a
expect-live b
storei stack:0 0
flush
expect-released b
expect-released a
)"},
    {"free_then_reuse_alias_high",
     R"(alloc a 32 high
free a
expect-released a
alloc b 32 high
store stack:0 b
free a
expect-live b
storei stack:0 0
flush
expect-released b
expect-released a
)"},
    {"null_store_kills_reference",
     R"(alloc a 16
store stack:0 a
store stack:0 null
free a
expect-released a
free null
)"},
    {"stale_pointer_store",
     R"(# storing a stale pointer value to a released object tracks nothing
alloc a 16
free a
expect-released a
store stack:0 a
load stack:0
flush
expect-released a
)"},
    {"overwrite_by_pointer",
     R"(# overwriting one pointer with another moves the reference
alloc a 16
alloc b 16
store stack:0 a
store stack:0 b
free a
expect-released a
free b
expect-live b
storei stack:0 0
flush
expect-released b
)"},
    {"two_refs_one_killed",
     R"(alloc a 32
store stack:0 a
store stack:1 a
free a
storei stack:0 0
period
expect-live a
storei stack:1 0
flush
expect-released a
)"},
    {"two_refs_one_killed_high",
     R"(alloc a 32 high
store stack:0 a
store stack:1 a
free a
storei stack:0 0
period
expect-live a
storei stack:1 0
flush
expect-released a
)"},
    {"mixed_referrers_period",
     R"(# heap plus stack referrers park on the period list; the heap ref
# dies with its container
alloc r 64
alloc x 16
store r+0x0 x
store stack:3 x
free x
expect-live x
storei stack:3 0
period
expect-live x
free r
expect-released r
flush
expect-released x
)"},
    {"mixed_referrers_period_high",
     R"(alloc r 64 high
alloc x 16 high
store r+0x0 x
store stack:3 x
free x
expect-live x
storei stack:3 0
period
expect-live x
free r
expect-released r
flush
expect-released x
)"},
    {"load_zero_fill",
     R"(# fresh objects read as zero
alloc a 64
load a+0x18
free a
expect-released a
)"},
    {"shared_region_pair",
     R"(# hash-region co-residents: freeing one never retains the other
alloc a 16 high
alloc b 16 high
store stack:0 a
free a
expect-live a
free b
expect-released b
storei stack:0 0
flush
expect-released a
)"},
    {"uaf_double_free_mix",
     R"(# UAF read, then double free, then settle
alloc a 48
storei a+0x10 3
store global:7 a
free a
load a+0x10
free a
expect-live a
storei global:7 0
flush
expect-released a
)"},
    {"uaf_double_free_mix_high",
     R"(alloc a 48 high
storei a+0x10 3
store global:7 a
free a
load a+0x10
free a
expect-live a
storei global:7 0
flush
expect-released a
)"},
};

}  // namespace

std::vector<std::pair<std::string, std::string>> cwe416_corpus() {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(std::size(kCorpus));
  for (const NamedTrace& t : kCorpus) {
    out.emplace_back(t.name, t.text);
  }
  return out;
}

}  // namespace dangsim
