#include "cpav/classify.hpp"

#include <omp.h>

#include <algorithm>
#include <map>

namespace cpav {

bool Fingerprint::same_as(const Fingerprint& other) const {
  return n_max == other.n_max && polys == other.polys;
}

Fingerprint fingerprint(const Permutation& sigma, int n_max, const Config& cfg) {
  const int m = sigma.size();
  if (n_max < m) throw invalid_input("fingerprint: n_max below pattern length");
  Config local = cfg;
  local.cluster_n_max = std::max(local.cluster_n_max, n_max);
  local.extension_cap = std::max(local.extension_cap, n_max);
  Fingerprint fp;
  fp.pattern = sigma;
  fp.n_max = n_max;
  fp.polys.reserve(static_cast<size_t>(n_max - m) + 1);
  for (int n = m; n <= n_max; ++n) {
    fp.polys.push_back(cluster_polynomial(PatternSet(sigma), n, local));
  }
  return fp;
}

int default_partition_nmax(int m) {
  if (m <= 4) return 12;
  if (m == 5) return 13;
  return 16;
}

namespace {

std::string signature(const Fingerprint& fp) {
  std::string s;
  for (const auto& poly : fp.polys) {
    s += std::to_string(poly.n);
    s += ':';
    for (const auto& [k, v] : poly.coeffs) {
      s += std::to_string(k);
      s += '=';
      s += v.get_str();
      s += ',';
    }
    s += ';';
  }
  return s;
}

}  // namespace

ClassPartition partition(int m, int n_max, const Config& cfg, bool validate_orbits) {
  if (m < 2) throw invalid_input("partition: m must be at least 2");
  if (n_max < 0) n_max = default_partition_nmax(m);
  if (n_max < m) throw invalid_input("partition: n_max below m");

  const auto patterns = all_permutations(m);
  std::vector<std::vector<Permutation>> orbits;
  std::map<Permutation, int> orbit_of;
  for (const auto& sigma : patterns) {
    if (orbit_of.count(sigma)) continue;
    std::vector<Permutation> orbit{sigma, sigma.reversed(), sigma.complemented(),
                                   sigma.reversed().complemented()};
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (const auto& tau : orbit) orbit_of[tau] = static_cast<int>(orbits.size());
    orbits.push_back(std::move(orbit));
  }

  const int orbit_count = static_cast<int>(orbits.size());
  std::vector<std::string> sig(static_cast<size_t>(orbit_count));
  std::string error;  // exceptions must not escape the parallel region
  const int threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int i = 0; i < orbit_count; ++i) {
    try {
      const Fingerprint fp = fingerprint(orbits[i].front(), n_max, cfg);
      sig[i] = signature(fp);
      if (validate_orbits) {
        for (size_t j = 1; j < orbits[i].size(); ++j) {
          const Fingerprint other = fingerprint(orbits[i][j], n_max, cfg);
          if (!fp.same_as(other)) {
            throw std::logic_error("orbit member fingerprint mismatch for " +
                                   orbits[i][j].str());
          }
        }
      }
    } catch (const std::exception& e) {
#pragma omp critical
      if (error.empty()) error = e.what();
    }
  }
  if (!error.empty()) throw std::runtime_error(error);

  std::map<std::string, std::vector<Permutation>> by_sig;
  for (int i = 0; i < orbit_count; ++i) {
    auto& members = by_sig[sig[i]];
    members.insert(members.end(), orbits[i].begin(), orbits[i].end());
  }

  ClassPartition part;
  part.m = m;
  part.n_max = n_max;
  for (auto& [s, members] : by_sig) {
    std::sort(members.begin(), members.end());
    part.classes.push_back(std::move(members));
  }
  std::sort(part.classes.begin(), part.classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return part;
}

PairReport verify_pair(const Permutation& sigma, const Permutation& tau, int n_max,
                       const Config& cfg) {
  if (sigma.size() != tau.size()) {
    throw invalid_input("verify_pair: patterns must have equal length");
  }
  PairReport rep;
  rep.sigma = sigma;
  rep.tau = tau;
  rep.n_max = n_max;
  const Fingerprint a = fingerprint(sigma, n_max, cfg);
  const Fingerprint b = fingerprint(tau, n_max, cfg);
  rep.equal = true;
  for (size_t i = 0; i < a.polys.size(); ++i) {
    if (!(a.polys[i].coeffs == b.polys[i].coeffs)) {
      rep.equal = false;
      rep.first_divergence = a.polys[i].n;
      break;
    }
  }
  return rep;
}

}  // namespace cpav
