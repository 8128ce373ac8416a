#include "cpav/identities.hpp"

#include <algorithm>

#include "cpav/cluster.hpp"
#include "cpav/series.hpp"

namespace cpav {

namespace {

Config raised(const Config& cfg, int N) {
  Config c = cfg;
  c.cluster_n_max = std::max(c.cluster_n_max, N);
  c.extension_cap = std::max(c.extension_cap, N);
  return c;
}

// cluster polynomial as a plain polynomial in t (no substitution)
UPoly t_poly(const ClusterPolynomial& r) {
  if (r.coeffs.empty()) return {};
  std::vector<mpq_class> c(static_cast<size_t>(r.coeffs.rbegin()->first) + 1, 0);
  for (const auto& [k, v] : r.coeffs) c[static_cast<size_t>(k)] = mpq_class(v);
  return UPoly(std::move(c));
}

IdentityReport compare_ogf(const std::string& name, int N, const PatternSet& ps,
                           const OgfSeries& closed, const Config& cfg) {
  IdentityReport rep;
  rep.name = name;
  rep.N = N;
  rep.pass = true;
  for (int n = 0; n <= N; ++n) {
    UPoly generic;
    if (n >= ps.min_length()) generic = t_poly(cluster_polynomial(ps, n, cfg));
    if (!(generic == closed.coeff(n))) {
      rep.pass = false;
      rep.first_mismatch = n;
      rep.detail = "cluster polynomial disagrees with the closed form at order " +
                   std::to_string(n);
      return rep;
    }
  }
  return rep;
}

}  // namespace

IdentityReport check_clomon(int m, int N, const Config& cfg) {
  const Config local = raised(cfg, N);
  const auto closed = monotone_cluster_coeffs(m, N);
  OgfSeries rhs = OgfSeries::zero(N);
  for (int n = 0; n <= N; ++n) rhs.c[n] = t_poly(closed[n]);
  return compare_ogf("clomon(" + std::to_string(m) + ")", N,
                     PatternSet(Permutation::identity(m)), rhs, local);
}

IdentityReport check_clo12435(int N, const Config& cfg) {
  const Config local = raised(cfg, N);
  IdentityReport rep;
  rep.name = "clo12435";
  rep.N = N;
  rep.pass = true;
  // -x^5 / (1 + x^3 + x^4): c_n + c_{n-3} + c_{n-4} = -[n == 5]
  std::vector<mpq_class> c(static_cast<size_t>(N) + 1, 0);
  for (int n = 5; n <= N; ++n) {
    mpq_class v = n == 5 ? mpq_class(-1) : mpq_class(0);
    if (n >= 3) v -= c[n - 3];
    if (n >= 4) v -= c[n - 4];
    c[n] = v;
  }
  const PatternSet ps(Permutation::parse("12435"));
  for (int n = 0; n <= N; ++n) {
    mpq_class generic = 0;
    if (n >= 5) generic = mpq_class(cluster_polynomial(ps, n, local).eval_alternating());
    if (generic != c[n]) {
      rep.pass = false;
      rep.first_mismatch = n;
      rep.detail = "signed cluster number disagrees at order " + std::to_string(n);
      return rep;
    }
  }
  return rep;
}

IdentityReport check_clo1324(int N, const Config& cfg) {
  const Config local = raised(cfg, N);
  // x / (1 + x - x C(t x^2)) - x, with C the Catalan series
  std::vector<UPoly> den(static_cast<size_t>(N) + 1);
  den[0] = UPoly(1);
  for (int k = 1; 2 * k + 1 <= N; ++k) {
    std::vector<mpq_class> tk(static_cast<size_t>(k) + 1, 0);
    tk[k] = -mpq_class(fuss_catalan(2, k));
    den[2 * k + 1] = UPoly(std::move(tk));
  }
  const auto inv = series_inverse(den, N);
  OgfSeries rhs = OgfSeries::zero(N);
  for (int n = 1; n <= N; ++n) rhs.c[n] = inv[n - 1];
  if (N >= 1) rhs.c[1] -= UPoly(1);
  return compare_ogf("clo1324", N, PatternSet(Permutation::parse("1324")), rhs, local);
}

IdentityReport check_clo1324gen(int s, int m, int N, const Config& cfg) {
  const Config local = raised(cfg, N);
  // x^{m-s} (B(t x^s) - 1) / (1 - (x + ... + x^{m-s-1})(B(t x^s) - 1))
  std::vector<UPoly> bm1(static_cast<size_t>(N) + 1);  // B(t x^s) - 1
  for (int k = 1; s * k <= N; ++k) {
    std::vector<mpq_class> tk(static_cast<size_t>(k) + 1, 0);
    tk[k] = mpq_class(fuss_catalan(s, k));
    bm1[s * k] = UPoly(std::move(tk));
  }
  std::vector<UPoly> geom(static_cast<size_t>(N) + 1);
  for (int d = 1; d <= m - s - 1 && d <= N; ++d) geom[d] = UPoly(1);
  auto den = series_mul(geom, bm1, N);
  for (auto& p : den) p = -p;
  den[0] += UPoly(1);
  auto frac = series_mul(bm1, series_inverse(den, N), N);
  OgfSeries rhs = OgfSeries::zero(N);
  for (int n = m - s; n <= N; ++n) rhs.c[n] = frac[n - (m - s)];
  return compare_ogf("clo1324gen(" + std::to_string(s) + "," + std::to_string(m) + ")", N,
                     PatternSet(dense_family_pattern(s, m)), rhs, local);
}

IdentityReport check_funceq1423(int N, const Config& cfg) {
  (void)cfg;
  IdentityReport rep;
  rep.name = "funceq1423";
  rep.N = N;
  rep.pass = true;
  // S(x) = 1 + x + sum_{n>=4} s_n x^n from the signed recurrence
  std::vector<UPoly> S(static_cast<size_t>(N) + 1);
  S[0] = UPoly(1);
  for (int n = 1; n <= N; ++n) S[n] = UPoly(mpq_class(rec1423_signed(n)));
  // inner = x / (1 + x^2), factor = x / (1 + x)
  std::vector<UPoly> inner(static_cast<size_t>(N) + 1);
  for (int j = 0; 2 * j + 1 <= N; ++j) inner[2 * j + 1] = UPoly(j % 2 == 0 ? 1 : -1);
  std::vector<UPoly> factor(static_cast<size_t>(N) + 1);
  for (int j = 1; j <= N; ++j) factor[j] = UPoly(j % 2 == 1 ? 1 : -1);
  auto rhs = series_mul(factor, series_compose(S, inner, N), N);
  rhs[0] += UPoly(1);
  for (int n = 0; n <= N; ++n) {
    if (!(S[n] == rhs[n])) {
      rep.pass = false;
      rep.first_mismatch = n;
      rep.detail = "functional equation fails at order " + std::to_string(n);
      return rep;
    }
  }
  return rep;
}

IdentityReport check_sigma_relation(int n_max, const Config& cfg) {
  const Config local = raised(cfg, n_max);
  IdentityReport rep;
  rep.name = "sigma_relation";
  rep.N = n_max;
  rep.pass = true;
  for (int n = 4; n <= n_max; ++n) {
    const ClusterPolynomial fam = sigma_family_polynomial(n, local);
    for (int h = 0; h <= n; ++h) {
      mpz_class want = 0;
      if (h >= 1 && (n - h) % 2 == 1) want = rec1423(n, (n - h - 1) / 2);
      if (fam.coeff(h) != want) {
        rep.pass = false;
        rep.first_mismatch = n;
        rep.detail = "family cluster number at n=" + std::to_string(n) +
                     ", h=" + std::to_string(h) + " disagrees with the 1423 recurrence";
        return rep;
      }
    }
  }
  return rep;
}

IdentityReport check_identity(const std::string& name, int N, const Config& cfg, int p1, int p2) {
  if (name == "clomon") return check_clomon(p1 == 0 ? 3 : p1, N, cfg);
  if (name == "clo12435") return check_clo12435(N, cfg);
  if (name == "clo1324") return check_clo1324(N, cfg);
  if (name == "clo1324gen") return check_clo1324gen(p1 == 0 ? 3 : p1, p2 == 0 ? 5 : p2, N, cfg);
  if (name == "funceq1423") return check_funceq1423(N, cfg);
  if (name == "sigma_relation") return check_sigma_relation(N, cfg);
  throw invalid_input("unknown identity name: " + name);
}

}  // namespace cpav
