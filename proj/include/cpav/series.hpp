#pragma once

#include <gmpxx.h>

#include <vector>

#include "cpav/common.hpp"
#include "cpav/permutation.hpp"
#include "cpav/upoly.hpp"

namespace cpav {

/// Truncated exponential series: value sum_n c_n z^n, 0 <= n <= N,
/// coefficients polynomials in the marker variable.
struct EgfSeries {
  int N = 0;
  std::vector<UPoly> c;  // size N + 1

  static EgfSeries zero(int N);
  const UPoly& coeff(int n) const;
  EgfSeries truncated(int N2) const;
  bool operator==(const EgfSeries&) const = default;
};

/// Truncated ordinary series: value sum_n c_n x^n.
struct OgfSeries {
  int N = 0;
  std::vector<UPoly> c;

  static OgfSeries zero(int N);
  const UPoly& coeff(int n) const;
  bool operator==(const OgfSeries&) const = default;
};

// truncated-series arithmetic on the coefficient lists (shared by both kinds)
std::vector<UPoly> series_mul(const std::vector<UPoly>& a, const std::vector<UPoly>& b, int N);
std::vector<UPoly> series_inverse(const std::vector<UPoly>& a, int N);
/// a(inner); inner must have zero constant term.
std::vector<UPoly> series_compose(const std::vector<UPoly>& a, const std::vector<UPoly>& inner,
                                  int N);

/// omega(u, z) = 1 - z - sum_{n>=2} r_n(u-1) z^n / n!.
EgfSeries omega_series(const PatternSet& patterns, int N, const Config& cfg = {});

/// Exact coefficients of omega(0, z) through z^N (generic pipeline at t = -1).
std::vector<mpq_class> omega_u0(const PatternSet& patterns, int N, const Config& cfg = {});

/// Multiplicative inverse; requires constant term 1.
EgfSeries reciprocal(const EgfSeries& s);

/// alpha_0..alpha_N, the avoider counts n! [z^n] 1/omega(0, z).
std::vector<mpz_class> avoiders(const PatternSet& patterns, int N, const Config& cfg = {});

EgfSeries egf_from_ogf(const OgfSeries& s);
OgfSeries ogf_from_egf(const EgfSeries& s);

EgfSeries derivative(const EgfSeries& s);

/// u = 0 slice of omega for the increasing pattern of length m >= 3:
/// sum_j z^{jm}/(jm)! - sum_j z^{jm+1}/(jm+1)!.
EgfSeries closed_form_monotone_omega(int m, int N);

/// omega for any non-overlapping pattern with first entry 1 and last entry 2:
/// 1 - integral of exp((u-1) v^{m-1} / (m-1)!).
EgfSeries closed_form_nonoverlap_b2(int m, int N);

}  // namespace cpav
