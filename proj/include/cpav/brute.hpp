#pragma once

#include <gmpxx.h>

#include <map>

#include "cpav/common.hpp"
#include "cpav/permutation.hpp"

namespace cpav {

/// Distribution of occurrence counts over S_n: coefficients[e] = #{pi : c_sigma(pi) = e}.
struct UDistribution {
  int n = 0;
  std::map<int, mpz_class> coefficients;

  mpz_class total() const;
  bool operator==(const UDistribution&) const = default;
};

// Exhaustive S_n scans. The OpenMP kernels split the scan by first entry;
// the serial variants are the reference the parallel ones are tested against.
mpz_class brute_avoiders(const PatternSet& patterns, int n, const Config& cfg = {});
mpz_class brute_avoiders_serial(const PatternSet& patterns, int n, const Config& cfg = {});

UDistribution brute_distribution(const Permutation& sigma, int n, const Config& cfg = {});
UDistribution brute_distribution_serial(const Permutation& sigma, int n, const Config& cfg = {});

}  // namespace cpav
