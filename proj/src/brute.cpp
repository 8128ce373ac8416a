#include "cpav/brute.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace cpav {

mpz_class UDistribution::total() const {
  mpz_class t = 0;
  for (const auto& [e, c] : coefficients) t += c;
  return t;
}

namespace {

// Window test against one pattern, as a chain of m-1 comparisons at fixed
// offsets (the inverse pattern gives the positions in increasing value order).
struct WindowMatcher {
  int m = 0;
  std::vector<int> off;  // off[r] = 0-based offset of the rank-(r+1) entry

  explicit WindowMatcher(const Permutation& sigma) : m(sigma.size()) {
    const Permutation inv = sigma.inverse();
    off.resize(m);
    for (int r = 0; r < m; ++r) off[r] = inv.at(r) - 1;
  }

  bool matches(const int* w) const {
    for (int r = 0; r + 1 < m; ++r) {
      if (w[off[r]] >= w[off[r + 1]]) return false;
    }
    return true;
  }
};

bool avoids(const int* p, int n, const std::vector<WindowMatcher>& ms) {
  for (const auto& wm : ms) {
    for (int i = 0; i + wm.m <= n; ++i) {
      if (wm.matches(p + i)) return false;
    }
  }
  return true;
}

int occurrence_count(const int* p, int n, const WindowMatcher& wm) {
  int c = 0;
  for (int i = 0; i + wm.m <= n; ++i) c += wm.matches(p + i);
  return c;
}

uint64_t factorial_u64(int n) {
  uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
  return f;
}

int resolve_threads(const Config& cfg) {
  return cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
}

}  // namespace

mpz_class brute_avoiders_serial(const PatternSet& patterns, int n, const Config& cfg) {
  if (n > cfg.brute_cap + 1) throw resource_limit("brute_avoiders: n exceeds cap");
  if (n < patterns.min_length()) return mpz_class(factorial_u64(n));

  std::vector<WindowMatcher> ms;
  for (const auto& p : patterns.patterns()) ms.emplace_back(p);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  uint64_t count = 0;
  do {
    count += avoids(perm.data(), n, ms);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return mpz_class(count);
}

mpz_class brute_avoiders(const PatternSet& patterns, int n, const Config& cfg) {
  if (n > cfg.brute_cap + 1) throw resource_limit("brute_avoiders: n exceeds cap");
  if (n < patterns.min_length()) return mpz_class(factorial_u64(n));

  std::vector<WindowMatcher> ms;
  for (const auto& p : patterns.patterns()) ms.emplace_back(p);

  uint64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(dynamic) num_threads(resolve_threads(cfg))
  for (int first = 1; first <= n; ++first) {
    std::vector<int> perm(n);
    perm[0] = first;
    int next = 0;
    for (int v = 1; v <= n; ++v) {
      if (v != first) perm[++next] = v;
    }
    do {
      count += avoids(perm.data(), n, ms);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
  }
  return mpz_class(count);
}

UDistribution brute_distribution_serial(const Permutation& sigma, int n, const Config& cfg) {
  if (n > cfg.brute_cap) throw resource_limit("brute_distribution: n exceeds cap");
  UDistribution dist;
  dist.n = n;
  const int m = sigma.size();
  if (n < m) {
    dist.coefficients[0] = mpz_class(factorial_u64(n));
    return dist;
  }
  WindowMatcher wm(sigma);
  std::vector<uint64_t> hist(static_cast<size_t>(n - m + 2), 0);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    ++hist[occurrence_count(perm.data(), n, wm)];
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (size_t e = 0; e < hist.size(); ++e) {
    if (hist[e]) dist.coefficients[static_cast<int>(e)] = mpz_class(hist[e]);
  }
  return dist;
}

UDistribution brute_distribution(const Permutation& sigma, int n, const Config& cfg) {
  if (n > cfg.brute_cap) throw resource_limit("brute_distribution: n exceeds cap");
  UDistribution dist;
  dist.n = n;
  const int m = sigma.size();
  if (n < m) {
    dist.coefficients[0] = mpz_class(factorial_u64(n));
    return dist;
  }
  WindowMatcher wm(sigma);
  const int buckets = n - m + 2;
  std::vector<uint64_t> hist(static_cast<size_t>(buckets), 0);
#pragma omp parallel num_threads(resolve_threads(cfg))
  {
    std::vector<uint64_t> local(static_cast<size_t>(buckets), 0);
#pragma omp for schedule(dynamic) nowait
    for (int first = 1; first <= n; ++first) {
      std::vector<int> perm(n);
      perm[0] = first;
      int next = 0;
      for (int v = 1; v <= n; ++v) {
        if (v != first) perm[++next] = v;
      }
      do {
        ++local[occurrence_count(perm.data(), n, wm)];
      } while (std::next_permutation(perm.begin() + 1, perm.end()));
    }
#pragma omp critical
    for (int e = 0; e < buckets; ++e) hist[e] += local[e];
  }
  for (size_t e = 0; e < hist.size(); ++e) {
    if (hist[e]) dist.coefficients[static_cast<int>(e)] = mpz_class(hist[e]);
  }
  return dist;
}

}  // namespace cpav
