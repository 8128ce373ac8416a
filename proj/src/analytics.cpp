#include "cpav/analytics.hpp"

#include <algorithm>
#include <optional>

#include "cpav/cluster.hpp"
#include "cpav/poset.hpp"
#include "cpav/series.hpp"

namespace cpav {

namespace {

constexpr double kBracketLo = 1.0;
constexpr double kBracketHi = 1.2757;

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

std::vector<Permutation> symmetry_orbit(const Permutation& sigma) {
  std::vector<Permutation> orbit{sigma, sigma.reversed(), sigma.complemented(),
                                 sigma.reversed().complemented()};
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

// omega(0, z) coefficients through z^N, by the cheapest exact source
std::vector<mpq_class> omega0_coeffs(const Permutation& sigma, int N, const Config& cfg,
                                     std::string& source) {
  const int m = sigma.size();
  const auto orbit = symmetry_orbit(sigma);
  for (const auto& tau : orbit) {
    if (tau == Permutation::identity(m)) {
      source = "monotone closed form";
      const EgfSeries s = closed_form_monotone_omega(m, N);
      std::vector<mpq_class> c(static_cast<size_t>(N) + 1);
      for (int n = 0; n <= N; ++n) c[n] = s.coeff(n).coeff(0);
      return c;
    }
  }
  if (is_non_overlapping(sigma)) {
    source = "non-overlapping block counts";
    const int a = std::min(sigma.at(0), sigma.at(m - 1));
    const int b = std::max(sigma.at(0), sigma.at(m - 1));
    std::vector<mpq_class> c(static_cast<size_t>(N) + 1, 0);
    c[0] = 1;
    if (N >= 1) c[1] = -1;
    for (int k = 1;; ++k) {
      const int n = k * (m - 1) + 1;
      if (n > N) break;
      // omega(0,z) = 1 - z - sum_k (-1)^k d_k z^n / n!
      mpq_class term(nonoverlapping_d(a, b, m, k, cfg), factorial(n));
      term.canonicalize();
      c[n] += (k % 2 == 0) ? -term : term;
    }
    return c;
  }
  source = "generic cluster pipeline";
  Config local = cfg;
  local.cluster_n_max = std::max(local.cluster_n_max, N);
  local.extension_cap = std::max(local.extension_cap, N);
  return omega_u0(PatternSet(sigma), N, local);
}

double eval_poly(const std::vector<mpq_class>& c, int N, double z) {
  double acc = 0.0;
  for (int n = std::min<int>(N, static_cast<int>(c.size()) - 1); n >= 0; --n) {
    acc = acc * z + c[n].get_d();
  }
  return acc;
}

std::optional<double> bisect_root(const std::vector<mpq_class>& c, int N) {
  double lo = kBracketLo, hi = kBracketHi;
  double flo = eval_poly(c, N, lo);
  double fhi = eval_poly(c, N, hi);
  if (!(flo > 0.0 && fhi < 0.0)) return std::nullopt;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = eval_poly(c, N, mid);
    if (fm > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

bool entirety_backed(const Permutation& sigma) {
  // chain bounds cover: bottom entry 1 somewhere in the orbit, non-overlapping
  // patterns, and the 2143 orbit
  for (const auto& tau : symmetry_orbit(sigma)) {
    if (tau.at(0) == 1) return true;
    if (tau.str() == "2143") return true;
  }
  return is_non_overlapping(sigma);
}

}  // namespace

GrowthReport growth_constant(const Permutation& sigma, int N, double tol, const Config& cfg) {
  if (sigma.size() < 3) throw invalid_input("growth_constant: pattern length must be >= 3");
  GrowthReport rep;
  rep.pattern = sigma;
  rep.N_lo = N;
  rep.N_hi = N + 10;
  rep.bracket_lo = kBracketLo;
  rep.bracket_hi = kBracketHi;
  rep.tol = tol;
  rep.entire_proven = entirety_backed(sigma);

  const auto coeffs = omega0_coeffs(sigma, N + 10, cfg, rep.source);
  const auto root_lo = bisect_root(coeffs, N);
  const auto root_hi = bisect_root(coeffs, N + 10);
  if (!root_lo || !root_hi) {
    rep.status = "no_sign_change";
    return rep;
  }
  rep.gap = std::abs(*root_lo - *root_hi);
  if (rep.gap > tol) {
    rep.status = "insufficient_terms";  // truncations disagree
    return rep;
  }
  rep.status = "ok";
  rep.z0 = *root_hi;
  rep.rho = 1.0 / rep.z0;
  return rep;
}

DominanceReport dominance_report(int m, int n_lo, int n_hi, const Config& cfg) {
  if (m < 3) throw invalid_input("dominance_report: m must be at least 3");
  if (n_lo < 0 || n_hi < n_lo) throw invalid_input("dominance_report: bad range");
  DominanceReport rep;
  rep.m = m;
  rep.n_lo = n_lo;
  rep.n_hi = n_hi;
  rep.monotone = Permutation::identity(m);
  {
    std::vector<int> lo_e;
    for (int v = 1; v <= m - 2; ++v) lo_e.push_back(v);
    lo_e.push_back(m);
    lo_e.push_back(m - 1);
    rep.conjectured_low = Permutation(std::move(lo_e));
    std::vector<int> hi_e{1};
    for (int v = 3; v <= m; ++v) hi_e.push_back(v);
    hi_e.push_back(2);
    rep.conjectured_high = Permutation(std::move(hi_e));
  }

  Config local = cfg;
  local.cluster_n_max = std::max(local.cluster_n_max, n_hi);
  local.extension_cap = std::max(local.extension_cap, n_hi);

  std::vector<Permutation> nonoverlapping;
  for (const auto& sigma : all_permutations(m)) {
    if (is_non_overlapping(sigma)) nonoverlapping.push_back(sigma);
  }
  for (const auto& p : nonoverlapping) rep.patterns.push_back(p.str());

  // alpha series per symmetry orbit; members share cluster numbers
  std::map<std::string, std::vector<mpz_class>> alpha;
  auto alpha_for = [&](const Permutation& p) -> const std::vector<mpz_class>& {
    const auto orbit = symmetry_orbit(p);
    const std::string rep_key = orbit.front().str();
    auto it = alpha.find(rep_key);
    if (it == alpha.end()) {
      it = alpha.emplace(rep_key, avoiders(PatternSet(orbit.front()), n_hi, local)).first;
    }
    return it->second;
  };

  const auto& alpha_mon = alpha_for(rep.monotone);
  const auto& alpha_low = alpha_for(rep.conjectured_low);
  const auto& alpha_high = alpha_for(rep.conjectured_high);

  for (int n = n_lo; n <= n_hi; ++n) {
    DominanceRow row;
    row.n = n;
    row.alpha_monotone = alpha_mon[n];
    for (const auto& p : nonoverlapping) row.alpha[p.str()] = alpha_for(p)[n];
    rep.rows.push_back(std::move(row));
  }

  rep.all_dominated = true;
  for (const auto& p : nonoverlapping) {
    const auto& a = alpha_for(p);
    bool dominated = true;
    bool conjecture = true;
    for (int n = n_lo; n <= n_hi; ++n) {
      if (n >= 2 * m && !(a[n] < alpha_mon[n])) dominated = false;
      if (!(alpha_low[n] <= a[n] && a[n] <= alpha_high[n])) conjecture = false;
    }
    rep.dominated[p.str()] = dominated;
    rep.conjecture_in_range[p.str()] = conjecture;
    rep.all_dominated = rep.all_dominated && dominated;
  }
  return rep;
}

ChainRatioReport chain_ratio(const PatternSet& patterns, int n_max, const Config& cfg) {
  if (n_max < patterns.min_length()) throw invalid_input("chain_ratio: n_max too small");
  if (n_max > 48) throw resource_limit("chain_ratio: n_max too large");
  (void)cfg;
  ChainRatioReport rep;
  rep.n_max = n_max;
  bool have = false;
  ClusterPoset scratch;
  for_each_layout_upto(patterns, n_max, [&](const OccurrenceLayout& layout) {
    build_cluster_poset_into(patterns, layout, scratch, /*validate=*/false);
    mpq_class ratio(scratch.longest_chain(), layout.length);
    ratio.canonicalize();
    if (!have || ratio < rep.min_ratio) {
      have = true;
      rep.min_ratio = ratio;
      rep.argmin = layout;
    }
    return true;
  });
  if (!have) throw invalid_input("chain_ratio: no layouts up to n_max");
  return rep;
}

BlowupReport verify_2413_blowup(int ell, const Config& cfg) {
  if (ell < 1) throw invalid_input("verify_2413_blowup: ell must be positive");
  BlowupReport rep;
  rep.ell = ell;
  rep.n = 5 * ell + 1;
  Config local = cfg;
  local.extension_cap = std::max(local.extension_cap, rep.n);
  const PatternSet ps(Permutation::parse("2413"));
  for (int j = 0; j < ell; ++j) {
    rep.layout.marks.push_back({5 * j + 1, 0});
    rep.layout.marks.push_back({5 * j + 3, 0});
  }
  rep.layout.length = rep.n;
  const ClusterPoset poset = build_cluster_poset(ps, rep.layout);
  rep.count = count_linear_extensions(poset, local);
  mpz_class f = factorial(ell);
  mpz_pow_ui(rep.bound.get_mpz_t(), f.get_mpz_t(), 5);
  rep.pass = rep.count >= rep.bound;

  const auto h = poset.heights();
  const int height = *std::max_element(h.begin(), h.end());
  std::vector<int> sizes(static_cast<size_t>(height), 0);
  for (int hv : h) ++sizes[hv - 1];
  rep.layer_sizes = sizes;
  std::sort(sizes.begin(), sizes.end());
  rep.layers_ok = height == 5 && sizes.size() == 5 && sizes[0] == ell && sizes[1] == ell &&
                  sizes[2] == ell && sizes[3] == ell && sizes[4] == ell + 1;
  return rep;
}

}  // namespace cpav
