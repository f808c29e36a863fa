#include "mvsf/cache.hpp"

#include <cstdlib>
#include <fstream>

namespace mvsf {

namespace {

const char* kCacheVersion = "mvsf-1";

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)v);
  return buf;
}

}  // namespace

std::string cacheKey(const std::string& kind, const Json& params) {
  Json canon;
  canon["kind"] = kind;
  canon["params"] = params;
  canon["version"] = kCacheVersion;
  return hex64(fnv1a(canon.dump()));
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

ResultCache ResultCache::fromEnvironment() {
  const char* env = std::getenv("MVSF_CACHE_DIR");
  if (env && *env) return ResultCache(env);
  return ResultCache();
}

std::optional<Json> ResultCache::load(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(dir_ / (key + ".json"));
  if (!in) return std::nullopt;
  std::string raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    Json doc = Json::parse(raw);  // whole-file parse, trailing bytes reject
    std::string body = doc.at("payload").dump();
    if (doc.at("crc").get<std::string>() != hex64(fnv1a(body))) return std::nullopt;
    return doc.at("payload");
  } catch (...) {
    return std::nullopt;
  }
}

void ResultCache::store(const std::string& key, const Json& payload) const {
  if (!enabled()) return;
  Json doc;
  doc["crc"] = hex64(fnv1a(payload.dump()));
  doc["key"] = key;
  doc["payload"] = payload;
  auto tmp = dir_ / (key + ".tmp");
  auto fin = dir_ / (key + ".json");
  {
    std::ofstream out(tmp);
    out << doc.dump(1) << "\n";
  }
  std::filesystem::rename(tmp, fin);
}

}  // namespace mvsf
