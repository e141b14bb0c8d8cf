#pragma once

#include <cstdint>
#include <string>

namespace stablejones {

// Budgets and defaults. Sources, later ones winning: built-in defaults, a
// JSON config file, environment (STABLE_JONES_CACHE, STABLE_JONES_THREADS),
// then command-line flags.
struct Config {
  std::uint64_t node_budget = 100'000'000;
  int max_order = 40;
  int threads = 1;
  std::string cache_dir = ".sjcache";
  bool use_cache = true;
};

// Reads {"node_budget": n, "max_order": k, "threads": t, "cache_dir": "..."}.
// Unknown keys are rejected. Throws IoError / ParseError.
Config load_config(const std::string& path, Config base = {});
void apply_environment(Config& cfg);

}  // namespace stablejones
