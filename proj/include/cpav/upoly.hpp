#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "cpav/common.hpp"

namespace cpav {

/// Polynomial in one marker variable with exact rational coefficients,
/// ascending powers, trailing zeros trimmed.
class UPoly {
 public:
  UPoly() = default;
  UPoly(int constant) : UPoly(mpq_class(constant)) {}          // NOLINT: implicit by design
  UPoly(const mpq_class& constant);                            // NOLINT
  explicit UPoly(std::vector<mpq_class> coeffs);

  static UPoly variable();
  /// p(t) with integer coefficients, evaluated at t = u - 1.
  static UPoly from_t_poly(const std::map<int, mpz_class>& t_coeffs);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const mpq_class& coeff(int i) const;
  const std::vector<mpq_class>& coeffs() const { return c_; }

  mpq_class eval(const mpq_class& u) const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  UPoly& operator*=(const mpq_class& s);
  UPoly& operator/=(const mpq_class& s);

  bool operator==(const UPoly&) const = default;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

}  // namespace cpav
