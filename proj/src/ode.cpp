#include "cpav/ode.hpp"

#include <algorithm>

#include "cpav/poset.hpp"

namespace cpav {

namespace {

const UPoly kOneMinusU(std::vector<mpq_class>{1, -1});
const UPoly kUMinus1(std::vector<mpq_class>{-1, 1});

std::vector<std::pair<int, UPoly>> standard_initial(int top) {
  // w(0) = 1, w'(0) = -1, higher derivatives zero through order `top`
  std::vector<std::pair<int, UPoly>> ic;
  ic.emplace_back(0, UPoly(1));
  ic.emplace_back(1, UPoly(-1));
  for (int i = 2; i <= top; ++i) ic.emplace_back(i, UPoly());
  return ic;
}

OdeTerm bare(int order, UPoly u_coeff) {
  OdeTerm t;
  t.order = order;
  t.coeff_z = {std::move(u_coeff)};
  return t;
}

std::pair<int, int> parse_two_ints(const std::string& arg) {
  const auto comma = arg.find(',');
  if (comma == std::string::npos) throw invalid_input("expected two comma-separated integers");
  return {std::stoi(arg.substr(0, comma)), std::stoi(arg.substr(comma + 1))};
}

}  // namespace

int OdeSpec::max_order() const {
  int j = 0;
  for (const auto& t : terms) j = std::max(j, t.order);
  return j;
}

int OdeSpec::max_zdeg() const {
  int d = 0;
  for (const auto& t : terms) d = std::max(d, static_cast<int>(t.coeff_z.size()) - 1);
  return d;
}

OdeSpec ode_monotone(int m) {
  if (m < 3) throw invalid_input("ode_monotone: m must be at least 3");
  OdeSpec ode;
  ode.name = "monotone(" + std::to_string(m) + ")";
  ode.terms.push_back(bare(m - 1, UPoly(1)));
  for (int j = 0; j <= m - 2; ++j) ode.terms.push_back(bare(j, kOneMinusU));
  ode.initial = standard_initial(m - 2);
  return ode;
}

OdeSpec ode_chain(const Permutation& sigma) {
  const int m = sigma.size();
  if (m < 3) throw invalid_input("ode_chain: pattern length must be at least 3");
  const auto verdict = chain_pattern_verdict(sigma, 3 * m);
  if (!verdict.chain_up_to) {
    throw invalid_input("ode_chain: pattern has a non-chain cluster layout");
  }
  OdeSpec ode;
  ode.name = "chain(" + sigma.str() + ")";
  ode.terms.push_back(bare(m - 1, UPoly(1)));
  for (int d : overlap_set(sigma)) ode.terms.push_back(bare(m - d - 1, kOneMinusU));
  ode.initial = standard_initial(m - 2);
  return ode;
}

OdeSpec ode_nearmono(int s, int m) {
  if (s < 3 || m - s < 2 || m - s > s) {
    throw invalid_input("ode_nearmono: need s >= 3 and 2 <= m - s <= s");
  }
  OdeSpec ode;
  ode.name = "nearmono(" + std::to_string(s) + "," + std::to_string(m) + ")";
  ode.terms.push_back(bare(m - 1, UPoly(1)));
  for (int j = 0; j <= m - s - 1; ++j) ode.terms.push_back(bare(j, kOneMinusU));
  ode.initial = standard_initial(m - 2);
  return ode;
}

OdeSpec ode_runchain(const Permutation& sigma) {
  const int m = sigma.size();
  if (m < 3) throw invalid_input("ode_runchain: pattern length must be at least 3");
  if (sigma == Permutation::identity(m)) {
    throw invalid_input("ode_runchain: increasing pattern excluded");
  }
  int r = 0;
  while (r < m && sigma.at(r) == r + 1) ++r;
  int s = 0;
  while (s < m && sigma.at(m - 1 - s) == m - s) ++s;
  int a = 1;
  while (a < m && sigma.at(a - 1) < sigma.at(a)) ++a;
  int b = 1;
  while (b < m && sigma.at(m - 1 - b) < sigma.at(m - b)) ++b;
  const int c = std::min(a, b);
  if (r < 1 || s < 1) throw invalid_input("ode_runchain: pattern must start at 1 and end at m");
  if (r + s < c + 1) throw invalid_input("ode_runchain: run lengths too short");
  for (int d : overlap_set(sigma)) {
    if (d <= m - c - 1) {
      throw invalid_input("ode_runchain: pattern overlaps outside the end runs");
    }
  }
  OdeSpec ode;
  ode.name = "runchain(" + sigma.str() + ")";
  ode.terms.push_back(bare(m - 1, UPoly(1)));
  for (int j = 0; j <= c - 1; ++j) ode.terms.push_back(bare(j, kOneMinusU));
  ode.initial = standard_initial(m - 2);
  return ode;
}

OdeSpec ode_nonoverlap_1b(int m, int b) {
  if (m < 3 || b < 2 || b >= m) throw invalid_input("ode_nonoverlap_1b: need 2 <= b < m");
  OdeSpec ode;
  ode.name = "nonoverlap_1b(" + std::to_string(m) + "," + std::to_string(b) + ")";
  ode.terms.push_back(bare(b, UPoly(1)));
  OdeTerm t;
  t.order = 1;
  t.coeff_z.assign(static_cast<size_t>(m - b) + 1, UPoly());
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(m - b));
  UPoly lead = kOneMinusU;
  lead /= mpq_class(fact);
  t.coeff_z[m - b] = lead;
  ode.terms.push_back(std::move(t));
  ode.initial = standard_initial(b - 1);
  return ode;
}

OdeSpec ode_12534(int order) {
  if (order != 4 && order != 5) throw invalid_input("ode_12534: order must be 4 or 5");
  OdeSpec ode;
  ode.name = order == 4 ? "p12534" : "p123645";
  ode.terms.push_back(bare(order, UPoly(1)));
  for (int j : {2, 1}) {
    OdeTerm t;
    t.order = j;
    t.coeff_z = {UPoly(), kOneMinusU};  // (1-u) z
    ode.terms.push_back(std::move(t));
  }
  ode.initial = standard_initial(order - 1);
  return ode;
}

OdeSpec ode_13254(int order) {
  if (order != 4 && order != 5) throw invalid_input("ode_13254: order must be 4 or 5");
  OdeSpec ode;
  ode.name = order == 4 ? "p13254" : "p132465";
  ode.terms.push_back(bare(order, UPoly(1)));
  ode.terms.push_back(bare(2, kOneMinusU));
  OdeTerm t;
  t.order = 1;
  t.coeff_z = {UPoly(), kOneMinusU};  // (1-u) z
  ode.terms.push_back(std::move(t));
  ode.initial = standard_initial(order - 1);
  return ode;
}

OdeSpec ode_1324() {
  OdeSpec ode;
  ode.name = "p1324";
  const UPoly T = kUMinus1;   // u - 1
  const UPoly T2 = T * T;
  {
    OdeTerm t;  // z w^(5)
    t.order = 5;
    t.coeff_z = {UPoly(), UPoly(1)};
    ode.terms.push_back(std::move(t));
  }
  {
    OdeTerm t;  // -((u-1)z - 3) w^(4)
    t.order = 4;
    t.coeff_z = {UPoly(3), -T};
    ode.terms.push_back(std::move(t));
  }
  {
    OdeTerm t;  // -3(u-1)(2z + 1) w^(3)
    t.order = 3;
    UPoly c0 = T;
    c0 *= mpq_class(-3);
    UPoly c1 = T;
    c1 *= mpq_class(-6);
    t.coeff_z = {c0, c1};
    ode.terms.push_back(std::move(t));
  }
  {
    OdeTerm t;  // (u-1)((4u-5)z - 6) w''
    t.order = 2;
    UPoly c0 = T;
    c0 *= mpq_class(-6);
    UPoly c1 = T * UPoly(std::vector<mpq_class>{-5, 4});
    t.coeff_z = {c0, c1};
    ode.terms.push_back(std::move(t));
  }
  {
    OdeTerm t;  // (u-1)(8(u-1)z - 3) w'
    t.order = 1;
    UPoly c0 = T;
    c0 *= mpq_class(-3);
    UPoly c1 = T2;
    c1 *= mpq_class(8);
    t.coeff_z = {c0, c1};
    ode.terms.push_back(std::move(t));
  }
  {
    OdeTerm t;  // 4(u-1)^2 z w
    t.order = 0;
    UPoly c1 = T2;
    c1 *= mpq_class(4);
    t.coeff_z = {UPoly(), c1};
    ode.terms.push_back(std::move(t));
  }
  ode.initial = standard_initial(3);
  return ode;
}

OdeSpec builtin_ode(const std::string& name, const std::string& arg) {
  if (name == "monotone") return ode_monotone(std::stoi(arg));
  if (name == "chain") return ode_chain(Permutation::parse(arg));
  if (name == "nearmono") {
    auto [s, m] = parse_two_ints(arg);
    return ode_nearmono(s, m);
  }
  if (name == "runchain") return ode_runchain(Permutation::parse(arg));
  if (name == "nonoverlap_1b") {
    auto [m, b] = parse_two_ints(arg);
    return ode_nonoverlap_1b(m, b);
  }
  if (name == "p12534") return ode_12534(4);
  if (name == "p123645") return ode_12534(5);
  if (name == "p13254") return ode_13254(4);
  if (name == "p132465") return ode_13254(5);
  if (name == "p1324") return ode_1324();
  throw invalid_input("unknown equation name: " + name);
}

OdeSpec ode_for_pattern(const Permutation& sigma) {
  const int m = sigma.size();
  std::vector<Permutation> orbit{sigma, sigma.reversed(), sigma.complemented(),
                                 sigma.reversed().complemented()};
  for (const auto& tau : orbit) {
    if (tau == Permutation::identity(m)) return ode_monotone(m);
    const std::string s = tau.str();
    if (s == "1324") return ode_1324();
    if (s == "12534") return ode_12534(4);
    if (s == "123645" || s == "124635") return ode_12534(5);
    if (s == "13254") return ode_13254(4);
    if (s == "132465" || s == "142365") return ode_13254(5);
  }
  for (const auto& tau : orbit) {
    if (is_non_overlapping(tau) && tau.at(0) == 1 && tau.at(m - 1) >= 2) {
      return ode_nonoverlap_1b(m, tau.at(m - 1));
    }
  }
  for (const auto& tau : orbit) {
    try {
      return ode_runchain(tau);
    } catch (const invalid_input&) {
    }
  }
  throw invalid_input("no catalog equation applies to pattern " + sigma.str());
}

EgfSeries ode_residual(const OdeSpec& ode, const EgfSeries& s) {
  const int J = ode.max_order();
  const int D = ode.max_zdeg();
  const int K = s.N - J - D;
  if (K < 0) throw invalid_input("ode_residual: series too short for this equation");

  std::vector<EgfSeries> der;
  der.push_back(s);
  for (int j = 1; j <= J; ++j) der.push_back(derivative(der.back()));

  EgfSeries res = EgfSeries::zero(K);
  for (const auto& term : ode.terms) {
    for (int d = 0; d < static_cast<int>(term.coeff_z.size()); ++d) {
      const UPoly& cz = term.coeff_z[d];
      if (cz.is_zero()) continue;
      for (int k = d; k <= K; ++k) {
        const UPoly& sv = der[term.order].coeff(k - d);
        if (!sv.is_zero()) res.c[k] += cz * sv;
      }
    }
  }
  return res;
}

OdeCheckReport check_ode(const OdeSpec& ode, const EgfSeries& s) {
  OdeCheckReport rep;
  rep.name = ode.name;
  rep.N = s.N;
  const EgfSeries res = ode_residual(ode, s);
  rep.checked_upto = res.N;
  rep.residual_zero = true;
  for (int k = 0; k <= res.N; ++k) {
    if (!res.c[k].is_zero()) {
      rep.residual_zero = false;
      rep.first_nonzero = k;
      break;
    }
  }
  rep.initial_ok = true;
  for (const auto& [order, want] : ode.initial) {
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(order));
    UPoly got = s.coeff(order);
    got *= mpq_class(fact);  // i! c_i = w^(i)(0)
    if (!(got == want)) {
      rep.initial_ok = false;
      break;
    }
  }
  return rep;
}

}  // namespace cpav
