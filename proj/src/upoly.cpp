#include "cpav/upoly.hpp"

namespace cpav {

namespace {
const mpq_class kZero = 0;
}

UPoly::UPoly(const mpq_class& constant) {
  if (constant != 0) c_.push_back(constant);
}

UPoly::UPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::variable() { return UPoly(std::vector<mpq_class>{0, 1}); }

UPoly UPoly::from_t_poly(const std::map<int, mpz_class>& t_coeffs) {
  // Horner in t = u - 1, highest power first.
  UPoly acc;
  const UPoly u_minus_1(std::vector<mpq_class>{-1, 1});
  int prev = -1;
  for (auto it = t_coeffs.rbegin(); it != t_coeffs.rend(); ++it) {
    if (prev >= 0) {
      for (int step = 0; step < prev - it->first; ++step) acc *= u_minus_1;
    }
    acc += UPoly(mpq_class(it->second));
    prev = it->first;
  }
  if (prev > 0) {
    for (int step = 0; step < prev; ++step) acc *= u_minus_1;
  }
  return acc;
}

const mpq_class& UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

mpq_class UPoly::eval(const mpq_class& u) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> prod(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(prod));
}

UPoly& UPoly::operator*=(const mpq_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= s;
  return *this;
}

UPoly& UPoly::operator/=(const mpq_class& s) {
  if (s == 0) throw invalid_input("UPoly: division by zero");
  for (auto& v : c_) v /= s;
  return *this;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

}  // namespace cpav
