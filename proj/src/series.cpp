#include "cpav/series.hpp"

#include <algorithm>

#include "cpav/cluster.hpp"

namespace cpav {

namespace {
const UPoly kZeroPoly;

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}
}  // namespace

EgfSeries EgfSeries::zero(int N) {
  EgfSeries s;
  s.N = N;
  s.c.assign(static_cast<size_t>(N) + 1, UPoly());
  return s;
}

const UPoly& EgfSeries::coeff(int n) const {
  if (n < 0 || n > N) return kZeroPoly;
  return c[static_cast<size_t>(n)];
}

EgfSeries EgfSeries::truncated(int N2) const {
  EgfSeries s = zero(std::min(N2, N));
  for (int n = 0; n <= s.N; ++n) s.c[n] = c[n];
  s.N = N2;
  s.c.resize(static_cast<size_t>(N2) + 1, UPoly());
  return s;
}

OgfSeries OgfSeries::zero(int N) {
  OgfSeries s;
  s.N = N;
  s.c.assign(static_cast<size_t>(N) + 1, UPoly());
  return s;
}

const UPoly& OgfSeries::coeff(int n) const {
  if (n < 0 || n > N) return kZeroPoly;
  return c[static_cast<size_t>(n)];
}

std::vector<UPoly> series_mul(const std::vector<UPoly>& a, const std::vector<UPoly>& b, int N) {
  std::vector<UPoly> out(static_cast<size_t>(N) + 1);
  for (size_t i = 0; i < a.size() && i <= static_cast<size_t>(N); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size() && i + j <= static_cast<size_t>(N); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

std::vector<UPoly> series_inverse(const std::vector<UPoly>& a, int N) {
  if (a.empty() || !(a[0] == UPoly(1))) {
    throw invalid_input("series inverse requires constant term 1");
  }
  std::vector<UPoly> inv(static_cast<size_t>(N) + 1);
  inv[0] = UPoly(1);
  for (int n = 1; n <= N; ++n) {
    UPoly acc;
    for (int j = 1; j <= n && j < static_cast<int>(a.size()); ++j) {
      if (a[j].is_zero()) continue;
      acc += a[j] * inv[n - j];
    }
    inv[n] = -acc;
  }
  return inv;
}

std::vector<UPoly> series_compose(const std::vector<UPoly>& a, const std::vector<UPoly>& inner,
                                  int N) {
  if (!inner.empty() && !inner[0].is_zero()) {
    throw invalid_input("series composition requires zero constant term");
  }
  // Horner: result = a_K + inner * (a_{K-1} + inner * (...))
  std::vector<UPoly> acc(static_cast<size_t>(N) + 1);
  const int K = std::min<int>(static_cast<int>(a.size()) - 1, N);
  for (int k = K; k >= 0; --k) {
    acc = series_mul(acc, inner, N);
    acc[0] += a[k];
  }
  return acc;
}

EgfSeries omega_series(const PatternSet& patterns, int N, const Config& cfg) {
  EgfSeries s = EgfSeries::zero(N);
  if (N >= 0) s.c[0] = UPoly(1);
  if (N >= 1) s.c[1] = UPoly(-1);
  const int m = patterns.min_length();
  for (int n = std::max(m, 2); n <= N; ++n) {
    const ClusterPolynomial r = cluster_polynomial(patterns, n, cfg);
    if (r.coeffs.empty()) continue;
    UPoly p = UPoly::from_t_poly(r.coeffs);
    p /= mpq_class(factorial(n));
    s.c[n] = -p;
  }
  return s;
}

std::vector<mpq_class> omega_u0(const PatternSet& patterns, int N, const Config& cfg) {
  std::vector<mpq_class> c(static_cast<size_t>(N) + 1, 0);
  if (N >= 0) c[0] = 1;
  if (N >= 1) c[1] = -1;
  const int m = patterns.min_length();
  for (int n = std::max(m, 2); n <= N; ++n) {
    const ClusterPolynomial r = cluster_polynomial(patterns, n, cfg);
    const mpz_class v = r.eval_alternating();  // r_n(-1)
    if (v != 0) c[n] = -mpq_class(v, factorial(n));
  }
  return c;
}

EgfSeries reciprocal(const EgfSeries& s) {
  EgfSeries out;
  out.N = s.N;
  out.c = series_inverse(s.c, s.N);
  return out;
}

std::vector<mpz_class> avoiders(const PatternSet& patterns, int N, const Config& cfg) {
  const auto w = omega_u0(patterns, N, cfg);
  // rational series inverse with constant term 1
  std::vector<mpq_class> inv(static_cast<size_t>(N) + 1, 0);
  inv[0] = 1;
  for (int n = 1; n <= N; ++n) {
    mpq_class acc = 0;
    for (int j = 1; j <= n; ++j) acc += w[j] * inv[n - j];
    inv[n] = -acc;
  }
  std::vector<mpz_class> alpha(static_cast<size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    mpq_class v = inv[n] * factorial(n);
    v.canonicalize();
    if (v.get_den() != 1) throw invalid_input("avoider count is not an integer");
    alpha[n] = v.get_num();
  }
  return alpha;
}

EgfSeries egf_from_ogf(const OgfSeries& s) {
  EgfSeries out = EgfSeries::zero(s.N);
  for (int n = 0; n <= s.N; ++n) {
    out.c[n] = s.c[n];
    out.c[n] /= mpq_class(factorial(n));
  }
  return out;
}

OgfSeries ogf_from_egf(const EgfSeries& s) {
  OgfSeries out = OgfSeries::zero(s.N);
  for (int n = 0; n <= s.N; ++n) {
    out.c[n] = s.c[n];
    out.c[n] *= mpq_class(factorial(n));
  }
  return out;
}

EgfSeries derivative(const EgfSeries& s) {
  if (s.N == 0) return EgfSeries::zero(0);
  EgfSeries out = EgfSeries::zero(s.N - 1);
  for (int n = 0; n < s.N; ++n) {
    out.c[n] = s.c[n + 1];
    out.c[n] *= mpq_class(n + 1);
  }
  return out;
}

EgfSeries closed_form_monotone_omega(int m, int N) {
  if (m == 2) {
    throw invalid_input("closed_form_monotone_omega: length-2 pattern unsupported");
  }
  if (m < 3) throw invalid_input("closed_form_monotone_omega: m must be at least 3");
  EgfSeries s = EgfSeries::zero(N);
  for (int j = 0; j * m <= N; ++j) {
    s.c[j * m] = UPoly(mpq_class(1, factorial(j * m)));
  }
  for (int j = 0; j * m + 1 <= N; ++j) {
    s.c[j * m + 1] -= UPoly(mpq_class(1, factorial(j * m + 1)));
  }
  return s;
}

EgfSeries closed_form_nonoverlap_b2(int m, int N) {
  if (m < 3) throw invalid_input("closed_form_nonoverlap_b2: m must be at least 3");
  EgfSeries s = EgfSeries::zero(N);
  s.c[0] = UPoly(1);
  const UPoly u_minus_1(std::vector<mpq_class>{-1, 1});
  UPoly power(1);  // (u-1)^j
  mpz_class jfact = 1;
  mpz_class mfact_pow = 1;  // ((m-1)!)^j
  const mpz_class mfact = factorial(m - 1);
  for (int j = 0;; ++j) {
    const int n = j * (m - 1) + 1;
    if (n > N) break;
    UPoly term = power;
    term /= mpq_class(jfact * mfact_pow * n);
    s.c[n] -= term;
    power *= u_minus_1;
    jfact *= j + 1;
    mfact_pow *= mfact;
  }
  return s;
}

}  // namespace cpav
