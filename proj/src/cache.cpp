#include "mb/cache.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mb/error.hpp"
#include "mb/io.hpp"
#include "mb/version.hpp"

namespace mb {

std::string content_hash(const std::string& payload) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64-bit
  for (unsigned char ch : payload) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::string cache_key(const std::string& kind, const std::string& payload) {
  std::string full = kind;
  full.push_back('\0');
  full += payload;
  full.push_back('\0');
  full += engine_version;
  return kind + "-" + content_hash(full);
}

ResultCache::ResultCache(std::string dir) : dir_(std::move(dir)) {
  if (dir_.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw input_error("cannot create cache directory " + dir_ + ": " + ec.message());
}

std::optional<std::string> ResultCache::get(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::filesystem::path p = std::filesystem::path(dir_) / (key + ".json");
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void ResultCache::put(const std::string& key, const std::string& value) const {
  if (!enabled()) return;
  std::filesystem::path p = std::filesystem::path(dir_) / (key + ".json");
  write_text_file_atomic(p.string(), value);
}

}  // namespace mb
