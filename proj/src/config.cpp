#include "stablejones/config.hpp"

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "stablejones/errors.hpp"

namespace stablejones {

Config load_config(const std::string& path, Config cfg) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path);
  std::ostringstream text;
  text << in.rdbuf();
  try {
    const auto j = nlohmann::json::parse(text.str());
    if (!j.is_object()) throw ParseError(path + ": config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (key == "node_budget") {
        cfg.node_budget = value.get<std::uint64_t>();
      } else if (key == "max_order") {
        cfg.max_order = value.get<int>();
      } else if (key == "threads") {
        cfg.threads = value.get<int>();
      } else if (key == "cache_dir") {
        cfg.cache_dir = value.get<std::string>();
      } else {
        throw ParseError(path + ": unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (cfg.threads < 1 || cfg.max_order < 0) throw ParseError(path + ": threads must be >= 1 and max_order >= 0");
  return cfg;
}

void apply_environment(Config& cfg) {
  if (const char* dir = std::getenv("STABLE_JONES_CACHE"); dir && *dir) cfg.cache_dir = dir;
  if (const char* t = std::getenv("STABLE_JONES_THREADS"); t && *t) {
    char* end = nullptr;
    const long n = std::strtol(t, &end, 10);
    if (*end != '\0' || n < 1 || n > 1024) throw InputError("STABLE_JONES_THREADS must be a positive integer");
    cfg.threads = static_cast<int>(n);
  }
}

}  // namespace stablejones
