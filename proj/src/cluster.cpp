#include "cpav/cluster.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <optional>

#include "cpav/cache.hpp"
#include "cpav/poset.hpp"

namespace cpav {

mpz_class ClusterPolynomial::coeff(int k) const {
  auto it = coeffs.find(k);
  return it == coeffs.end() ? mpz_class(0) : it->second;
}

mpz_class ClusterPolynomial::eval_int(long t) const {
  mpz_class acc = 0;
  const mpz_class tz(t);
  for (const auto& [k, c] : coeffs) {
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), tz.get_mpz_t(), static_cast<unsigned long>(k));
    acc += c * pw;
  }
  return acc;
}

mpz_class FeetTable::row_sum() const {
  mpz_class s = 0;
  for (const auto& [l, c] : by_feet) s += c;
  return s;
}

namespace {

void add_poly(std::map<int, mpz_class>& into, const std::map<int, mpz_class>& from) {
  for (const auto& [k, v] : from) into[k] += v;
}

void trim_zeros(std::map<int, mpz_class>& m) {
  for (auto it = m.begin(); it != m.end();) {
    it = (it->second == 0) ? m.erase(it) : std::next(it);
  }
}

ClusterPolynomial compute_cluster_polynomial(const PatternSet& patterns, int n, const Config& cfg,
                                             bool parallel) {
  if (n > cfg.cluster_n_max) {
    throw resource_limit("cluster_polynomial: n exceeds cluster_n_max");
  }
  if (n > ClusterPoset::kMaxN) {
    throw resource_limit("cluster_polynomial: n exceeds the 64-position limit");
  }
  ClusterPolynomial out;
  out.n = n;

  std::optional<ClusterCache> cache;
  if (!cfg.cache_dir.empty()) {
    cache.emplace(cfg.cache_dir);
    if (auto hit = cache->get(patterns.canonical_key(), n)) {
      out.coeffs = std::move(*hit);
      return out;
    }
  }

  if (parallel) {
    const int threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
    constexpr size_t kBatch = 4096;
    std::vector<OccurrenceLayout> batch;
    batch.reserve(kBatch);
    std::vector<std::map<int, mpz_class>> acc(static_cast<size_t>(threads));

    auto flush = [&]() {
      const int count = static_cast<int>(batch.size());
#pragma omp parallel num_threads(threads)
      {
        ClusterPoset scratch;
        auto& local = acc[static_cast<size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 16)
        for (int i = 0; i < count; ++i) {
          build_cluster_poset_into(patterns, batch[i], scratch, /*validate=*/false);
          local[batch[i].mark_count()] += count_linear_extensions(scratch, cfg);
        }
      }
      batch.clear();
    };

    for_each_layout(patterns, n, [&](const OccurrenceLayout& layout) {
      batch.push_back(layout);
      if (batch.size() >= kBatch) flush();
    });
    flush();
    for (const auto& part : acc) add_poly(out.coeffs, part);
  } else {
    ClusterPoset scratch;
    for_each_layout(patterns, n, [&](const OccurrenceLayout& layout) {
      build_cluster_poset_into(patterns, layout, scratch, /*validate=*/false);
      out.coeffs[layout.mark_count()] += count_linear_extensions(scratch, cfg);
    });
  }
  trim_zeros(out.coeffs);

  if (cache) cache->put(patterns.canonical_key(), n, out.coeffs);
  return out;
}

}  // namespace

ClusterPolynomial cluster_polynomial(const PatternSet& patterns, int n, const Config& cfg) {
  return compute_cluster_polynomial(patterns, n, cfg, /*parallel=*/true);
}

ClusterPolynomial cluster_polynomial_serial(const PatternSet& patterns, int n, const Config& cfg) {
  return compute_cluster_polynomial(patterns, n, cfg, /*parallel=*/false);
}

std::vector<ClusterPolynomial> monotone_cluster_coeffs(int m, int N) {
  if (m < 2) throw invalid_input("monotone_cluster_coeffs: m must be at least 2");
  std::vector<ClusterPolynomial> out(static_cast<size_t>(std::max(N + 1, 0)));
  for (int n = 0; n <= N; ++n) out[n].n = n;
  if (m <= N) out[m].coeffs[1] = 1;
  for (int n = m + 1; n <= N; ++n) {
    // c_n = t * (c_{n-1} + ... + c_{n-m+1})
    std::map<int, mpz_class> sum;
    for (int d = 1; d <= m - 1 && n - d >= m; ++d) add_poly(sum, out[n - d].coeffs);
    for (auto& [k, v] : sum) out[n].coeffs[k + 1] = std::move(v);
  }
  return out;
}

namespace {

mpz_class binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// glued chains: k blocks of m elements, rank b of block j identified with
// rank a of block j+1
mpz_class glued_chain_extensions(int a, int b, int m, int k, const Config& cfg) {
  const int n = k * (m - 1) + 1;
  if (n > ClusterPoset::kMaxN) throw resource_limit("nonoverlapping_d: poset too large");
  Config local = cfg;
  local.extension_cap = std::max(local.extension_cap, n);
  ClusterPoset p(n);
  // ids[r] = element holding rank r+1 of the current block; the shared element
  // reuses the previous block's id
  std::vector<int> ids(static_cast<size_t>(m));
  int next_id = 0;
  int shared_id = -1;
  for (int j = 0; j < k; ++j) {
    for (int r = 0; r < m; ++r) {
      if (j > 0 && r == a - 1) {
        ids[r] = shared_id;
      } else {
        ids[r] = next_id++;
      }
    }
    for (int r = 0; r + 1 < m; ++r) p.add_relation(ids[r], ids[r + 1]);
    shared_id = ids[b - 1];
  }
  if (next_id != n) throw invalid_input("glued chain construction out of sync");
  return count_linear_extensions(p, local);
}

}  // namespace

mpz_class nonoverlapping_d(int a, int b, int m, int k, const Config& cfg) {
  if (m < 2 || a < 1 || b < 1 || a > m || b > m || a >= b) {
    throw invalid_input("nonoverlapping_d: need 1 <= a < b <= m");
  }
  if (k < 1) throw invalid_input("nonoverlapping_d: k must be positive");
  // complement+reversal swaps (a, b) to (m+1-b, m+1-a) without changing counts
  if (a != 1 && b == m) return nonoverlapping_d(m + 1 - b, m + 1 - a, m, k, cfg);
  if (a == 1) {
    mpz_class d = 1;
    for (int j = 2; j <= k; ++j) {
      d *= binom(static_cast<long>(j - 1) * (m - 1) + (m - b), m - b);
    }
    return d;
  }
  return glued_chain_extensions(a, b, m, k, cfg);
}

mpz_class rec1423(int n, int k) {
  if (n < 0 || k < 0) return 0;
  // dense table over (n, k); k <= n/2 throughout
  static thread_local std::vector<std::vector<mpz_class>> table;  // table[n][k]
  static thread_local int built_n = -1;
  if (n > built_n) {
    table.assign(static_cast<size_t>(n) + 1, {});
    for (int nn = 0; nn <= n; ++nn) {
      table[nn].assign(static_cast<size_t>(nn / 2 + 2), 0);
      if (nn == 1) {
        table[1][0] = 1;
        continue;
      }
      if (nn <= 3) continue;
      for (int kk = 0; kk <= nn / 2 + 1; ++kk) {
        mpz_class acc = 0;
        for (int i = 2; 2 * i <= nn; ++i) {
          const int pn = nn - 2 * i + 1;
          const int pk = kk - i + 1;
          if (pn < 0 || pk < 0 || pk >= static_cast<int>(table[pn].size())) continue;
          if (table[pn][pk] == 0) continue;
          acc += binom(nn - i - 1, i - 1) * table[pn][pk];
        }
        table[nn][kk] = std::move(acc);
      }
    }
    built_n = n;
  }
  if (k >= static_cast<int>(table[n].size())) return 0;
  return table[n][k];
}

mpz_class rec1423_signed(int n) {
  if (n < 0) return 0;
  std::vector<mpz_class> s(static_cast<size_t>(n) + 1, 0);
  if (n >= 1) s[1] = 1;
  for (int nn = 4; nn <= n; ++nn) {
    mpz_class acc = 0;
    for (int i = 2; 2 * i <= nn; ++i) {
      const int pn = nn - 2 * i + 1;
      if (pn < 0) continue;
      mpz_class term = binom(nn - i - 1, i - 1) * s[pn];
      if (i % 2 == 0) {
        acc -= term;  // (-1)^{i-1}
      } else {
        acc += term;
      }
    }
    s[nn] = std::move(acc);
  }
  return s[n];
}

namespace {

struct Feet2143 {
  // value[n][k][l]
  std::vector<std::vector<std::vector<mpz_class>>> value;

  explicit Feet2143(int n_max) {
    value.assign(static_cast<size_t>(n_max) + 1, {});
    for (int n = 0; n <= n_max; ++n) {
      const int k_hi = std::max(n / 2, 0);
      value[n].assign(static_cast<size_t>(k_hi) + 1, {});
      for (int k = 0; k <= k_hi; ++k) {
        value[n][k].assign(static_cast<size_t>(std::max(k, 1)), 0);
        for (int l = 0; l < static_cast<int>(value[n][k].size()); ++l) {
          mpz_class acc = 0;
          if (n == 2 * k + 2 && l == 0) acc = 1;
          for (int i = 2; 2 * i <= n; ++i) {
            const int pn = n - 2 * i + 1;
            const int pk = k - i + 1;
            if (pn < 0 || pn > n_max || pk < 0) continue;
            if (pk >= static_cast<int>(value[pn].size())) continue;
            for (int j = std::max(l - 1, 0); j <= k - 2; ++j) {
              if (j >= static_cast<int>(value[pn][pk].size())) break;
              const mpz_class& sub = value[pn][pk][j];
              if (sub == 0) continue;
              const long ways = n - 2 * i - j;
              if (ways <= 0) continue;
              acc += mpz_class(ways) * (l + 1) * binom(2 * i + j - l - 3, 2 * i - 4) * sub;
            }
          }
          value[n][k][l] = std::move(acc);
        }
      }
    }
  }
};

}  // namespace

FeetTable rec2143(int n, int k) {
  FeetTable t;
  t.n = n;
  t.k = k;
  if (n < 4 || k < 1 || n < 2 * k + 2) return t;
  Feet2143 dp(n);
  if (k < static_cast<int>(dp.value[n].size())) {
    for (int l = 0; l < static_cast<int>(dp.value[n][k].size()); ++l) {
      if (dp.value[n][k][l] != 0) t.by_feet[l] = dp.value[n][k][l];
    }
  }
  return t;
}

mpz_class fuss_catalan(int s, int k) {
  if (s < 2 || k < 0) throw invalid_input("fuss_catalan: need s >= 2, k >= 0");
  mpz_class r = binom(static_cast<long>(s) * k, k);
  mpz_class q;
  mpz_divexact_ui(q.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>((s - 1) * k + 1));
  return q;
}

Permutation dense_family_pattern(int s, int m) {
  if (s < 2 || m < s + 2) throw invalid_input("dense_family_pattern: need s >= 2, m >= s + 2");
  std::vector<int> e;
  e.reserve(static_cast<size_t>(m));
  e.push_back(1);
  for (int v = 3; v <= s + 1; ++v) e.push_back(v);
  e.push_back(2);
  for (int v = s + 2; v <= m; ++v) e.push_back(v);
  return Permutation(std::move(e));
}

mpz_class dense_cluster_count(int s, int m, int k, const Config& cfg) {
  if (s < 2 || m < s + 2 || m > 2 * s) {
    throw invalid_input("dense_cluster_count: need s + 2 <= m <= 2s");
  }
  if (k < 1) throw invalid_input("dense_cluster_count: k must be positive");
  const int n = (k - 1) * s + m;
  if (n > ClusterPoset::kMaxN) throw resource_limit("dense_cluster_count: poset too large");
  const PatternSet ps(dense_family_pattern(s, m));
  OccurrenceLayout layout;
  for (int j = 0; j < k; ++j) layout.marks.push_back({1 + j * s, 0});
  layout.length = n;
  Config local = cfg;
  local.extension_cap = std::max(local.extension_cap, n);
  return count_linear_extensions(build_cluster_poset(ps, layout), local);
}

std::vector<Permutation> sigma_family_patterns(int max_len) {
  std::vector<Permutation> out;
  for (int a = 2; 2 * a <= max_len; ++a) {
    std::vector<int> e;
    e.reserve(static_cast<size_t>(2 * a));
    for (int v = 1; v <= a; ++v) e.push_back(v);
    for (int v = a + 2; v <= 2 * a; ++v) e.push_back(v);
    e.push_back(a + 1);
    out.push_back(Permutation(std::move(e)));
  }
  return out;
}

ClusterPolynomial sigma_family_polynomial(int n, const Config& cfg) {
  auto members = sigma_family_patterns(n);
  if (members.empty()) {
    ClusterPolynomial empty;
    empty.n = n;
    return empty;
  }
  return cluster_polynomial(PatternSet(std::move(members)), n, cfg);
}

}  // namespace cpav
