#pragma once

#include <optional>
#include <string>

namespace mb {

// Stable content hash for cache keys (FNV-1a over the payload), hex string.
std::string content_hash(const std::string& payload);

// File-backed result cache.  Keys are content hashes of the full input
// description (including the engine version and budgets), so stale entries
// can never be returned for changed inputs.  Writes go through a temporary
// file and a rename, so readers never observe partial entries.  An empty
// directory disables the cache.
class ResultCache {
 public:
  explicit ResultCache(std::string dir);

  bool enabled() const { return !dir_.empty(); }
  const std::string& dir() const { return dir_; }

  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& value) const;

 private:
  std::string dir_;
};

// Cache key for a named computation: hashes kind, payload, and the engine
// version together.
std::string cache_key(const std::string& kind, const std::string& payload);

}  // namespace mb
