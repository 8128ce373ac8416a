#include "cpav/cache.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "cpav/common.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace cpav {

uint64_t fnv1a64(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

ClusterCache::ClusterCache(std::string dir) : dir_(std::move(dir)) {
  if (dir_.empty()) throw invalid_input("cache directory must be nonempty");
  fs::create_directories(dir_);
}

std::string ClusterCache::path_for(const std::string& key, int n) const {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(key + "|n=" + std::to_string(n))));
  return (fs::path(dir_) / (std::string(buf) + ".json")).string();
}

std::optional<std::map<int, mpz_class>> ClusterCache::get(const std::string& key, int n) const {
  std::ifstream in(path_for(key, n));
  if (!in) return std::nullopt;
  json j;
  try {
    in >> j;
  } catch (const json::exception&) {
    return std::nullopt;
  }
  if (!j.is_object() || j.value("schema", -1) != kSchemaVersion) return std::nullopt;
  if (j.value("patterns", std::string()) != key || j.value("n", -1) != n) return std::nullopt;
  if (!j.contains("coeffs") || !j["coeffs"].is_object()) return std::nullopt;
  std::map<int, mpz_class> out;
  try {
    for (const auto& [k, v] : j["coeffs"].items()) {
      out[std::stoi(k)] = mpz_class(v.get<std::string>());
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return out;
}

void ClusterCache::put(const std::string& key, int n, const std::map<int, mpz_class>& coeffs) const {
  json j;
  j["schema"] = kSchemaVersion;
  j["patterns"] = key;
  j["n"] = n;
  json c = json::object();
  for (const auto& [k, v] : coeffs) c[std::to_string(k)] = v.get_str();
  j["coeffs"] = c;

  static std::atomic<unsigned> counter{0};
  const std::string target = path_for(key, n);
  const std::string tmp = target + ".tmp." + std::to_string(::getpid()) + "." +
                          std::to_string(counter.fetch_add(1));
  {
    std::ofstream out(tmp);
    out << j.dump();
    out.flush();
    if (!out) {
      std::remove(tmp.c_str());
      return;  // cache is best-effort; failures never affect results
    }
  }
  std::rename(tmp.c_str(), target.c_str());
}

}  // namespace cpav
