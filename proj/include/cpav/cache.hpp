#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

namespace cpav {

/// Persistent store of cluster polynomials, one JSON file per (pattern-set, n).
/// Filenames are a stable 64-bit hash of the canonical key; writes go through
/// a temporary file and rename, so readers never observe partial records.
class ClusterCache {
 public:
  static constexpr int kSchemaVersion = 1;

  explicit ClusterCache(std::string dir);

  std::optional<std::map<int, mpz_class>> get(const std::string& key, int n) const;
  void put(const std::string& key, int n, const std::map<int, mpz_class>& coeffs) const;

  std::string path_for(const std::string& key, int n) const;

 private:
  std::string dir_;
};

uint64_t fnv1a64(const std::string& data);

}  // namespace cpav
