#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dangsim/engine.hpp"
#include "dangsim/workload.hpp"

namespace py = pybind11;

namespace {

dangsim::EngineConfig make_config(const std::string& compression,
                                  uint32_t cache_bits, uint32_t direct_bits,
                                  uint32_t hash_bits, uint64_t period_threshold,
                                  uint64_t seed, bool oracle_check,
                                  bool final_flush, bool default_high) {
  dangsim::EngineConfig cfg;
  cfg.compression = dangsim::Compression::parse(compression);
  cfg.cache_bits = cache_bits;
  cfg.direct_bits = direct_bits;
  cfg.hash_bits = hash_bits;
  cfg.period_threshold = period_threshold;
  cfg.seed = seed;
  cfg.oracle_check = oracle_check;
  cfg.final_flush = final_flush;
  cfg.default_high = default_high;
  return cfg;
}

py::dict stats_dict(const dangsim::StatsReport& s) {
  py::dict d;
  d["n_obj"] = s.n_obj;
  d["n_ptr_stores"] = s.n_ptr_stores;
  d["n_logged"] = s.n_logged;
  d["dup_hits"] = s.dup_hits;
  d["dup_rate"] = s.dup_rate();
  d["n_free_calls"] = s.n_free_calls;
  d["n_released"] = s.n_released;
  d["n_retained_at_end"] = s.n_retained_at_end;
  d["n_double_free"] = s.n_double_free;
  d["n_uaf_loads"] = s.n_uaf_loads;
  d["searching"] = s.searching;
  d["verifying"] = s.verifying;
  d["logging"] = s.logging;
  d["handling"] = s.handling;
  return d;
}

}  // namespace

PYBIND11_MODULE(_dangsim, m) {
  m.doc() = "Trace-driven dangling-pointer elimination runtime";

  m.def(
      "size_class",
      [](uint64_t requested) {
        dangsim::SizeClass c = dangsim::size_class(requested);
        return py::make_tuple(c.exponent, c.alloc_size);
      },
      py::arg("requested"),
      "Size-class exponent and rounded allocation size for a request");

  m.def(
      "encode",
      [](uint64_t base, uint32_t exponent) {
        return dangsim::encode(base, exponent).raw;
      },
      py::arg("base"), py::arg("exponent"),
      "Tagged pointer word for an aligned base and class exponent");

  m.def(
      "id_of",
      [](uint64_t raw) { return dangsim::id_of(dangsim::TaggedWord{raw}); },
      py::arg("raw"), "Implicit object ID of a tagged pointer word");

  m.def(
      "strip",
      [](uint64_t raw) { return dangsim::strip(dangsim::TaggedWord{raw}); },
      py::arg("raw"), "Plain address of a tagged pointer word");

  m.def(
      "run_trace",
      [](const std::string& text, const std::string& compression,
         uint32_t cache_bits, uint32_t direct_bits, uint32_t hash_bits,
         uint64_t period_threshold, uint64_t seed, bool oracle_check,
         bool final_flush, bool default_high) {
        dangsim::Engine engine(make_config(
            compression, cache_bits, direct_bits, hash_bits, period_threshold,
            seed, oracle_check, final_flush, default_high));
        return stats_dict(engine.run_text(text));
      },
      py::arg("text"), py::arg("compression") = "off",
      py::arg("cache_bits") = 20, py::arg("direct_bits") = 32,
      py::arg("hash_bits") = 20, py::arg("period_threshold") = 1000,
      py::arg("seed") = 1, py::arg("oracle_check") = false,
      py::arg("final_flush") = true, py::arg("default_high") = false,
      "Replay a trace from text and return the run statistics");

  m.def(
      "generate",
      [](const std::string& pattern, uint64_t objects, uint64_t stores,
         uint64_t seed) {
        return dangsim::generate(dangsim::WorkloadSpec{
            dangsim::parse_pattern(pattern), objects, stores, seed});
      },
      py::arg("pattern"), py::arg("objects"), py::arg("stores"),
      py::arg("seed") = 0, "Deterministic synthetic workload trace text");

  m.def(
      "corpus",
      [] {
        py::dict d;
        for (const auto& [name, text] : dangsim::cwe416_corpus()) {
          d[py::str(name)] = text;
        }
        return d;
      },
      "Named use-after-free scenario traces");
}
