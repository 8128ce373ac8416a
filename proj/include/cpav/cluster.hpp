#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "cpav/common.hpp"
#include "cpav/layout.hpp"
#include "cpav/permutation.hpp"

namespace cpav {

/// Exact cluster numbers for fixed n: coeffs[k] = r_{n,k}, zeros omitted.
struct ClusterPolynomial {
  int n = 0;
  std::map<int, mpz_class> coeffs;

  mpz_class coeff(int k) const;
  mpz_class eval_int(long t) const;            // r_n(t) at an integer point
  mpz_class eval_alternating() const { return eval_int(-1); }
  mpz_class total() const { return eval_int(1); }

  bool operator==(const ClusterPolynomial&) const = default;
};

/// Sum of linear extension counts over all layouts of length n.
/// The OpenMP variant enumerates layouts in batches and counts them in
/// parallel; the serial variant is the reference implementation.
ClusterPolynomial cluster_polynomial(const PatternSet& patterns, int n, const Config& cfg = {});
ClusterPolynomial cluster_polynomial_serial(const PatternSet& patterns, int n,
                                            const Config& cfg = {});

/// Coefficients of t x^m / (1 - t(x + ... + x^{m-1})) through x^N;
/// the cluster numbers of the increasing pattern of length m.
std::vector<ClusterPolynomial> monotone_cluster_coeffs(int m, int N);

/// Linear extensions of the k-block glued-chain poset shared by every
/// non-overlapping pattern with first entry a and last entry b (a < b).
/// For a = 1 this uses the one-term product recurrence; otherwise the poset
/// is built explicitly and counted.
mpz_class nonoverlapping_d(int a, int b, int m, int k, const Config& cfg = {});

/// Cluster-number recurrence for the pattern 1423.
mpz_class rec1423(int n, int k);
/// Signed sums s_n = sum_k (-1)^k cl_{n,k} for 1423, via the signed recurrence.
mpz_class rec1423_signed(int n);

/// Feet-refined cluster numbers for the pattern 2143 at fixed (n, k).
struct FeetTable {
  int n = 0;
  int k = 0;
  std::map<int, mpz_class> by_feet;  // l -> cl_{n,k,l}, zeros omitted

  mpz_class row_sum() const;
};
FeetTable rec2143(int n, int k);

/// Number of s-Dyck paths with k up-steps: binom(sk, k) / ((s-1)k + 1).
mpz_class fuss_catalan(int s, int k);

/// Linear extensions of the dense k-cluster poset of the pattern
/// 1 3 4 .. (s+1) 2 (s+2) .. m, counted through the generic poset machinery.
mpz_class dense_cluster_count(int s, int m, int k, const Config& cfg = {});

/// The family {1 2 .. a (a+2) (a+3) .. (2a) (a+1) : a >= 2}, members of length <= max_len.
std::vector<Permutation> sigma_family_patterns(int max_len);
/// Multi-pattern cluster polynomial over that family (variable counts marks).
ClusterPolynomial sigma_family_polynomial(int n, const Config& cfg = {});

/// Pattern 1 3 4 .. (s+1) 2 (s+2) .. m.
Permutation dense_family_pattern(int s, int m);

}  // namespace cpav
