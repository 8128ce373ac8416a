#pragma once

#include <vector>

#include "cpav/cluster.hpp"
#include "cpav/common.hpp"
#include "cpav/permutation.hpp"

namespace cpav {

/// Cluster polynomials of sigma for n = m..n_max. Equality of fingerprints is
/// necessary for equal occurrence distributions at every n_max; it is reported
/// as "equal up to n_max", never as a proof of equivalence.
struct Fingerprint {
  Permutation pattern;
  int n_max = 0;
  std::vector<ClusterPolynomial> polys;

  bool same_as(const Fingerprint& other) const;
};

Fingerprint fingerprint(const Permutation& sigma, int n_max, const Config& cfg = {});

struct ClassPartition {
  int m = 0;
  int n_max = 0;
  std::vector<std::vector<Permutation>> classes;  // members sorted; classes by first member

  int count() const { return static_cast<int>(classes.size()); }
};

/// Groups S_m by fingerprint equality. Reversal/complement orbits are merged
/// up front; validate_orbits recomputes every member's fingerprint instead of
/// trusting the symmetry.
ClassPartition partition(int m, int n_max = -1, const Config& cfg = {},
                         bool validate_orbits = false);

int default_partition_nmax(int m);

struct PairReport {
  Permutation sigma, tau;
  int n_max = 0;
  bool equal = false;
  int first_divergence = -1;  // n of the first differing cluster polynomial
};

PairReport verify_pair(const Permutation& sigma, const Permutation& tau, int n_max,
                       const Config& cfg = {});

}  // namespace cpav
