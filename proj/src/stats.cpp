#include "dangsim/stats.hpp"

#include <cstdio>

namespace dangsim {

std::string StatsReport::to_text() const {
  std::string out;
  auto put = [&out](const char* key, uint64_t v) {
    out += key;
    out += '=';
    out += std::to_string(v);
    out += '\n';
  };
  put("n_obj", n_obj);
  put("n_ptr_stores", n_ptr_stores);
  put("n_logged", n_logged);
  put("dup_hits", dup_hits);
  char rate[32];
  std::snprintf(rate, sizeof rate, "%.6f", dup_rate());
  out += "dup_rate=";
  out += rate;
  out += '\n';
  put("n_free_calls", n_free_calls);
  put("n_released", n_released);
  put("n_retained_at_end", n_retained_at_end);
  put("n_double_free", n_double_free);
  put("n_uaf_loads", n_uaf_loads);
  put("searching", searching);
  put("verifying", verifying);
  put("logging", logging);
  put("handling", handling);
  return out;
}

}  // namespace dangsim
