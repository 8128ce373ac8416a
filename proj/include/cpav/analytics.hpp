#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "cpav/common.hpp"
#include "cpav/layout.hpp"
#include "cpav/permutation.hpp"

namespace cpav {

struct GrowthReport {
  Permutation pattern;
  std::string status;  // "ok" | "no_sign_change"
  std::string source;  // which series source supplied omega(0, z)
  double z0 = 0.0;     // smallest positive root of the truncated omega(0, z)
  double rho = 0.0;    // 1 / z0
  int N_lo = 0, N_hi = 0;
  double gap = 0.0;  // |root(N_lo) - root(N_hi)|
  double bracket_lo = 0.0, bracket_hi = 0.0;
  bool entire_proven = false;  // false: root-finding rests on an unproven hypothesis
  double tol = 0.0;
};

/// Bisection on truncations of omega(0, z) at orders N and N+10 inside the
/// bracket (1, 1.2757); the two roots must agree within tol.
GrowthReport growth_constant(const Permutation& sigma, int N, double tol,
                             const Config& cfg = {});

struct DominanceRow {
  int n = 0;
  mpz_class alpha_monotone;
  std::map<std::string, mpz_class> alpha;  // per non-overlapping pattern
};

struct DominanceReport {
  int m = 0;
  int n_lo = 0, n_hi = 0;
  Permutation monotone, conjectured_low, conjectured_high;
  std::vector<std::string> patterns;  // all non-overlapping members of S_m
  std::vector<DominanceRow> rows;
  // strict alpha_n(sigma) < alpha_n(12..m) for all n >= 2m in range
  std::map<std::string, bool> dominated;
  // reported, not asserted: alpha_n(low) <= alpha_n(sigma) <= alpha_n(high)
  std::map<std::string, bool> conjecture_in_range;
  bool all_dominated = false;
};

DominanceReport dominance_report(int m, int n_lo, int n_hi, const Config& cfg = {});

struct ChainRatioReport {
  int n_max = 0;
  mpq_class min_ratio;      // min over layouts of longest_chain / length
  OccurrenceLayout argmin;  // lexicographically first layout attaining it
};

ChainRatioReport chain_ratio(const PatternSet& patterns, int n_max, const Config& cfg = {});

struct BlowupReport {
  int ell = 0;
  int n = 0;
  OccurrenceLayout layout;
  mpz_class count;               // exact linear extensions
  mpz_class bound;               // (ell!)^5
  bool pass = false;             // count >= bound
  std::vector<int> layer_sizes;  // antichain layers by height
  bool layers_ok = false;        // five layers: four of size ell, one of ell+1
};

/// The alternating-gap witness layout for 2413 of length 5*ell + 1.
BlowupReport verify_2413_blowup(int ell, const Config& cfg = {});

}  // namespace cpav
