#pragma once

#include <optional>
#include <string>

namespace stablejones {

// Content-addressed result store. One JSON record per key, written to a
// temporary file and renamed into place, so readers never see partial
// records. Records with a wrong key, version or checksum are deleted on read.
class ResultCache {
 public:
  explicit ResultCache(std::string dir);

  // The key covers the tool version, so a version bump misses old records.
  static std::string key(const std::string& op, const std::string& subject, int order);

  std::optional<std::string> get(const std::string& op, const std::string& subject, int order) const;
  // Failures to write are swallowed: the cache is an optimization.
  void put(const std::string& op, const std::string& subject, int order, const std::string& value) const;

  const std::string& dir() const noexcept { return dir_; }
  std::string path_for(const std::string& key) const;

 private:
  std::string dir_;
};

}  // namespace stablejones
