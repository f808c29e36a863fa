#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "mvsf/jsonio.hpp"

namespace mvsf {

// Stable content hash of the canonical parameter dump plus a version tag;
// equal inputs give equal keys across runs.
std::string cacheKey(const std::string& kind, const Json& params);

// File-backed result cache. Writes go to a temporary name and are renamed
// into place; payloads carry a checksum and corrupt entries read as misses.
class ResultCache {
 public:
  ResultCache() = default;
  explicit ResultCache(std::filesystem::path dir);

  // directory from the environment override, or disabled when unset
  static ResultCache fromEnvironment();

  bool enabled() const { return !dir_.empty(); }
  std::optional<Json> load(const std::string& key) const;
  void store(const std::string& key, const Json& payload) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace mvsf
