#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dangsim/engine.hpp"
#include "dangsim/workload.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dangsim: trace-driven dangling-pointer elimination runtime"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "replay a trace file");
  std::string trace_path;
  std::string compression = "off";
  std::string placement = "low";
  std::string stats_out;
  dangsim::EngineConfig cfg;
  bool no_final_flush = false;
  run->add_option("file", trace_path, "trace file")->required();
  run->add_option("--compression", compression, "off | block:<words> | full");
  run->add_option("--cache-bits", cfg.cache_bits, "log2 Log Cache slots");
  run->add_option("--direct-bits", cfg.direct_bits, "direct/hash boundary exponent N");
  run->add_option("--hash-bits", cfg.hash_bits, "log2 hash table entries");
  run->add_option("--period-threshold", cfg.period_threshold, "period list sweep threshold");
  run->add_option("--placement", placement, "default heap region: low | high");
  run->add_option("--seed", cfg.seed, "run seed (table sign)");
  run->add_flag("--oracle-check", cfg.oracle_check,
                "audit every release against the sweep oracle");
  run->add_option("--stats-out", stats_out, "write key=value stats to a file");
  run->add_flag("--no-final-flush", no_final_flush, "skip the implicit end-of-trace flush");
  run->add_option("--inject-hit-rate", cfg.inject_hit_rate,
                  "fault-injection hook: fraction of probes forced to hit")
      ->group("");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a synthetic workload trace");
  std::string pattern = "compute-intensive";
  std::string gen_out;
  dangsim::WorkloadSpec spec;
  gen->add_option("--pattern", pattern, "compute-intensive | mem-intensive")->required();
  gen->add_option("--objects", spec.objects, "object count")->required();
  gen->add_option("--stores", spec.stores, "store count")->required();
  gen->add_option("--seed", spec.seed, "generator seed");
  gen->add_option("-o,--out", gen_out, "output file")->required();

  // corpus
  auto* corpus = app.add_subcommand("corpus", "write the UAF scenario corpus");
  std::string corpus_dir;
  corpus->add_option("--out", corpus_dir, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      if (placement != "low" && placement != "high") {
        throw std::runtime_error("--placement must be low or high");
      }
      cfg.compression = dangsim::Compression::parse(compression);
      cfg.default_high = placement == "high";
      cfg.final_flush = !no_final_flush;

      dangsim::Engine engine(cfg);
      dangsim::StatsReport stats = engine.run_text(read_file(trace_path));
      std::string text = stats.to_text();
      std::cout << text;
      if (!stats_out.empty()) write_file(stats_out, text);
      return 0;
    }
    if (*gen) {
      spec.pattern = dangsim::parse_pattern(pattern);
      write_file(gen_out, dangsim::generate(spec));
      return 0;
    }
    if (*corpus) {
      std::filesystem::create_directories(corpus_dir);
      auto traces = dangsim::cwe416_corpus();
      for (const auto& [name, text] : traces) {
        write_file(corpus_dir + "/" + name + ".trace", text);
      }
      std::cout << traces.size() << " traces written to " << corpus_dir << "\n";
      return 0;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
