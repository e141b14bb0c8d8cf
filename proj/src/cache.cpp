#include "stablejones/cache.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

namespace stablejones {

namespace fs = std::filesystem;

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

ResultCache::ResultCache(std::string dir) : dir_(std::move(dir)) {}

std::string ResultCache::key(const std::string& op, const std::string& subject, int order) {
  return std::string(STABLEJONES_VERSION) + "/" + op + "/" + subject + "/" + std::to_string(order);
}

std::string ResultCache::path_for(const std::string& k) const { return (fs::path(dir_) / (hex64(fnv1a(k)) + ".json")).string(); }

std::optional<std::string> ResultCache::get(const std::string& op, const std::string& subject, int order) const {
  const std::string k = key(op, subject, order);
  const std::string path = path_for(k);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream text;
  text << in.rdbuf();
  in.close();
  try {
    const auto j = nlohmann::json::parse(text.str());
    const std::string value = j.at("value");
    if (j.at("key") == k && j.at("tool_version") == STABLEJONES_VERSION && j.at("checksum") == hex64(fnv1a(value)))
      return value;
  } catch (const nlohmann::json::exception&) {
  }
  std::error_code ec;
  fs::remove(path, ec);
  return std::nullopt;
}

void ResultCache::put(const std::string& op, const std::string& subject, int order, const std::string& value) const {
  const std::string k = key(op, subject, order);
  std::error_code ec;
  fs::create_directories(dir_, ec);
  const auto now = std::chrono::duration_cast<std::chrono::seconds>(
                       std::chrono::system_clock::now().time_since_epoch())
                       .count();
  const nlohmann::json record{{"key", k},
                              {"tool_version", STABLEJONES_VERSION},
                              {"created_at", now},
                              {"checksum", hex64(fnv1a(value))},
                              {"value", value}};
  std::random_device rd;
  const fs::path tmp = fs::path(dir_) / (".tmp-" + hex64((std::uint64_t{rd()} << 32) | rd()));
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) return;
    out << record.dump();
    if (!out) {
      fs::remove(tmp, ec);
      return;
    }
  }
  fs::rename(tmp, path_for(k), ec);
  if (ec) fs::remove(tmp, ec);
}

}  // namespace stablejones
