#pragma once

#include <string>
#include <vector>

#include "cpav/common.hpp"
#include "cpav/permutation.hpp"
#include "cpav/series.hpp"
#include "cpav/upoly.hpp"

namespace cpav {

/// One term coeff(z, u) * w^{(order)}; coeff is a polynomial in z whose
/// coefficients are polynomials in u.
struct OdeTerm {
  int order = 0;
  std::vector<UPoly> coeff_z;  // ascending powers of z
};

/// Linear ODE sum_j coeff_j(z, u) w^{(j)} = 0 with initial conditions at z = 0.
struct OdeSpec {
  std::string name;
  std::vector<OdeTerm> terms;
  std::vector<std::pair<int, UPoly>> initial;  // (derivative order, value)

  int max_order() const;
  int max_zdeg() const;
};

// catalog builders
OdeSpec ode_monotone(int m);
OdeSpec ode_chain(const Permutation& sigma);
OdeSpec ode_nearmono(int s, int m);           // pattern 12..(s-1)(s+1)s(s+2)..m
OdeSpec ode_runchain(const Permutation& sigma);  // overlap only in the end runs
OdeSpec ode_nonoverlap_1b(int m, int b);
OdeSpec ode_12534(int order = 4);  // order 5 covers the 123645 family
OdeSpec ode_13254(int order = 4);  // order 5 covers the 132465 family
OdeSpec ode_1324();

/// Name-based dispatch for the CLI; `arg` is a pattern or "s,m"/"m,b" parameters.
OdeSpec builtin_ode(const std::string& name, const std::string& arg = "");

/// Picks the catalog entry that applies to the given pattern.
OdeSpec ode_for_pattern(const Permutation& sigma);

struct OdeCheckReport {
  std::string name;
  int N = 0;
  int checked_upto = -1;  // residual coefficients verified for orders 0..checked_upto
  bool residual_zero = false;
  bool initial_ok = false;
  int first_nonzero = -1;
  bool pass() const { return residual_zero && initial_ok; }
};

/// Applies the ODE to the truncated series and reports whether the residual
/// vanishes through the checkable order and the initial conditions hold.
EgfSeries ode_residual(const OdeSpec& ode, const EgfSeries& s);
OdeCheckReport check_ode(const OdeSpec& ode, const EgfSeries& s);

}  // namespace cpav
