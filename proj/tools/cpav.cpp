// Command-line front end: exact cluster-method computations with JSON output.
// Exit codes: 0 success/verified, 1 verification failed, 2 usage error,
// 3 resource limit.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cpav/analytics.hpp"
#include "cpav/brute.hpp"
#include "cpav/classify.hpp"
#include "cpav/cluster.hpp"
#include "cpav/common.hpp"
#include "cpav/identities.hpp"
#include "cpav/json_io.hpp"
#include "cpav/ode.hpp"
#include "cpav/series.hpp"
#include "json.hpp"

using nlohmann::json;
using namespace cpav;

namespace {

struct Range {
  int lo = 1;
  int hi = 10;
};

Range parse_range(const std::string& text) {
  Range r;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = std::stoi(text);
  } else {
    r.lo = std::stoi(text.substr(0, dots));
    r.hi = std::stoi(text.substr(dots + 2));
  }
  if (r.lo < 0 || r.hi < r.lo) throw invalid_input("bad range: " + text);
  return r;
}

Config load_config(int argc, char** argv) {
  Config cfg;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--config") {
      std::ifstream in(argv[i + 1]);
      if (!in) throw invalid_input(std::string("cannot open config file ") + argv[i + 1]);
      json j;
      in >> j;
      cfg.brute_cap = j.value("brute_cap", cfg.brute_cap);
      cfg.extension_cap = j.value("extension_cap", cfg.extension_cap);
      cfg.cluster_n_max = j.value("cluster_n_max", cfg.cluster_n_max);
      cfg.series_N = j.value("series_N", cfg.series_N);
      cfg.tol = j.value("tol", cfg.tol);
      cfg.threads = j.value("threads", cfg.threads);
      cfg.cache_dir = j.value("cache_dir", cfg.cache_dir);
    }
  }
  return cfg;
}

Config raised(const Config& cfg, int N) {
  Config c = cfg;
  c.cluster_n_max = std::max(c.cluster_n_max, N);
  c.extension_cap = std::max(c.extension_cap, N);
  return c;
}

int cmd_avoid(const Config& cfg, const std::string& pattern, const std::string& range,
              bool brute) {
  const Range r = parse_range(range);
  const PatternSet ps = PatternSet::parse(pattern);
  const auto alpha = avoiders(ps, r.hi, raised(cfg, r.hi));
  json out;
  out["pattern"] = ps.str();
  out["n_lo"] = r.lo;
  out["n_hi"] = r.hi;
  json table = json::object();
  for (int n = r.lo; n <= r.hi; ++n) table[std::to_string(n)] = alpha[n].get_str();
  out["alpha"] = table;
  bool agree = true;
  if (brute) {
    json btable = json::object();
    for (int n = r.lo; n <= std::min(r.hi, cfg.brute_cap + 1); ++n) {
      const mpz_class v = brute_avoiders(ps, n, cfg);
      btable[std::to_string(n)] = v.get_str();
      agree = agree && v == alpha[n];
    }
    out["brute"] = btable;
    out["agree"] = agree;
  }
  std::cout << out.dump(2) << "\n";
  return agree ? 0 : 1;
}

int cmd_clusters(const Config& cfg, const std::string& pattern, int n, bool feet) {
  const PatternSet ps = PatternSet::parse(pattern);
  json out;
  out["pattern"] = ps.str();
  out["n"] = n;
  const ClusterPolynomial r = cluster_polynomial(ps, n, raised(cfg, n));
  out["coeffs"] = cluster_json(r);
  if (feet) {
    if (ps.str() != "2143") throw invalid_input("--feet applies to the pattern 2143 only");
    json ft = json::object();
    for (int k = 1; 2 * k + 2 <= n; ++k) {
      const FeetTable t = rec2143(n, k);
      if (!t.by_feet.empty()) ft[std::to_string(k)] = feet_json(t)["by_feet"];
    }
    out["feet"] = ft;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_omega(const Config& cfg, const std::string& pattern, int N, const std::string& u) {
  const PatternSet ps = PatternSet::parse(pattern);
  const EgfSeries s = omega_series(ps, N, raised(cfg, N));
  json out;
  out["pattern"] = ps.str();
  if (u.empty()) {
    out.update(series_json(s));
  } else {
    const mpq_class uq(u);
    EgfSeries fixed = EgfSeries::zero(N);
    for (int n = 0; n <= N; ++n) fixed.c[n] = UPoly(s.coeff(n).eval(uq));
    out["u"] = rat_str(uq);
    out.update(series_json(fixed));
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_growth(const Config& cfg, const std::string& pattern, int N, double tol) {
  const GrowthReport rep = growth_constant(Permutation::parse(pattern), N, tol, cfg);
  std::cout << growth_json(rep).dump(2) << "\n";
  return rep.status == "ok" ? 0 : 1;
}

int cmd_classify(const Config& cfg, int m, int n_max, bool validate) {
  const ClassPartition part = partition(m, n_max, cfg, validate);
  std::cout << partition_json(part).dump(2) << "\n";
  return 0;
}

int cmd_verify_ode(const Config& cfg, const std::string& spec, const std::string& pattern_opt,
                   int N) {
  OdeSpec ode;
  Permutation test_pattern;
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string name = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    ode = builtin_ode(name, arg);
    if (!pattern_opt.empty()) {
      test_pattern = Permutation::parse(pattern_opt);
    } else if (name == "monotone") {
      test_pattern = Permutation::identity(std::stoi(arg));
    } else if (name == "chain" || name == "runchain") {
      test_pattern = Permutation::parse(arg);
    } else if (name == "nearmono") {
      const auto comma = arg.find(',');
      const int s = std::stoi(arg.substr(0, comma));
      const int m = std::stoi(arg.substr(comma + 1));
      std::vector<int> e;
      for (int v = 1; v <= s - 1; ++v) e.push_back(v);
      e.push_back(s + 1);
      e.push_back(s);
      for (int v = s + 2; v <= m; ++v) e.push_back(v);
      test_pattern = Permutation(std::move(e));
    } else {
      throw invalid_input("this equation family needs an explicit --pattern");
    }
  } else if (spec.size() > 1 && spec[0] == 'p' && std::isdigit(static_cast<unsigned char>(spec[1]))) {
    ode = builtin_ode(spec);
    test_pattern =
        pattern_opt.empty() ? Permutation::parse(spec.substr(1)) : Permutation::parse(pattern_opt);
  } else {
    test_pattern = Permutation::parse(spec);
    ode = ode_for_pattern(test_pattern);
  }
  const EgfSeries omega = omega_series(PatternSet(test_pattern), N, raised(cfg, N));
  const OdeCheckReport rep = check_ode(ode, omega);
  json out;
  out["kind"] = "ode";
  out["name"] = rep.name;
  out["pattern"] = test_pattern.str();
  out["N"] = N;
  out["checked_upto"] = rep.checked_upto;
  out["residual_zero"] = rep.residual_zero;
  out["initial_ok"] = rep.initial_ok;
  out["pass"] = rep.pass();
  if (!rep.residual_zero) out["first_nonzero"] = rep.first_nonzero;
  std::cout << out.dump(2) << "\n";
  return rep.pass() ? 0 : 1;
}

int cmd_verify_identity(const Config& cfg, const std::string& name, int N, int m, int s) {
  if (N < 0) {
    if (name == "clomon" || name == "clo12435") N = 30;
    else if (name == "clo1324" || name == "funceq1423") N = 20;
    else if (name == "clo1324gen") N = 16;
    else N = 13;
  }
  IdentityReport rep;
  if (name == "clomon") {
    rep = check_clomon(m > 0 ? m : 3, N, cfg);
  } else if (name == "clo1324gen") {
    rep = check_clo1324gen(s > 0 ? s : 3, m > 0 ? m : 5, N, cfg);
  } else {
    rep = check_identity(name, N, cfg);
  }
  json out;
  out["kind"] = "identity";
  out["name"] = rep.name;
  out["N"] = rep.N;
  out["pass"] = rep.pass;
  if (!rep.pass) {
    out["first_mismatch"] = rep.first_mismatch;
    out["detail"] = rep.detail;
  }
  std::cout << out.dump(2) << "\n";
  return rep.pass ? 0 : 1;
}

int cmd_verify_pair(const Config& cfg, const std::string& p1, const std::string& p2, int n_max) {
  const PairReport rep =
      verify_pair(Permutation::parse(p1), Permutation::parse(p2), n_max, cfg);
  json out;
  out["kind"] = "pair";
  out["sigma"] = rep.sigma.str();
  out["tau"] = rep.tau.str();
  out["n_max"] = rep.n_max;
  out["equal_up_to_n_max"] = rep.equal;
  if (!rep.equal) out["first_divergence"] = rep.first_divergence;
  std::cout << out.dump(2) << "\n";
  return rep.equal ? 0 : 1;
}

int cmd_verify_dominance(const Config& cfg, int m, int n_lo, int n_hi) {
  if (n_lo < 0) n_lo = 2 * m;
  if (n_hi < 0) n_hi = 16;
  const DominanceReport rep = dominance_report(m, n_lo, n_hi, cfg);
  std::cout << dominance_json(rep).dump(2) << "\n";
  return rep.all_dominated ? 0 : 1;
}

int cmd_verify_blowup(const Config& cfg, int ell) {
  const BlowupReport rep = verify_2413_blowup(ell, cfg);
  std::cout << blowup_json(rep).dump(2) << "\n";
  return rep.pass && rep.layers_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  try {
    cfg = load_config(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{"Exact enumeration of permutations avoiding consecutive patterns"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file (flags win)");
  app.add_option("--threads", cfg.threads, "worker thread count (0 = default)");
  app.add_option("--cache-dir", cfg.cache_dir, "cluster polynomial cache directory");
  app.add_option("--brute-cap", cfg.brute_cap, "largest n for exhaustive scans");
  app.add_option("--extension-cap", cfg.extension_cap, "largest poset for extension counting");
  app.add_option("--cluster-n-max", cfg.cluster_n_max, "largest n for cluster polynomials");
  app.add_option("--series-N", cfg.series_N, "default series truncation order");
  app.add_option("--tol", cfg.tol, "numeric agreement tolerance");

  // avoid
  auto* avoid = app.add_subcommand("avoid", "count pattern-avoiding permutations");
  std::string avoid_pattern, avoid_range = "1..10";
  bool avoid_brute = false;
  avoid->add_option("pattern", avoid_pattern)->required();
  avoid->add_option("--n", avoid_range, "n or a..b range");
  avoid->add_flag("--brute", avoid_brute, "cross-check against the exhaustive scan");

  // clusters
  auto* clusters = app.add_subcommand("clusters", "cluster polynomial for fixed n");
  std::string clusters_pattern;
  int clusters_n = 0;
  bool clusters_feet = false;
  clusters->add_option("pattern", clusters_pattern)->required();
  clusters->add_option("--n", clusters_n)->required();
  clusters->add_flag("--feet", clusters_feet, "feet-refined table (pattern 2143)");

  // omega
  auto* omega = app.add_subcommand("omega", "truncated inverse generating function");
  std::string omega_pattern, omega_u;
  int omega_N = -1;
  omega->add_option("pattern", omega_pattern)->required();
  omega->add_option("--N", omega_N, "truncation order");
  omega->add_option("--u", omega_u, "evaluate at a fixed rational u");

  // growth
  auto* growth = app.add_subcommand("growth", "growth constant via root finding");
  std::string growth_pattern;
  int growth_N = -1;
  double growth_tol = -1.0;
  growth->add_option("pattern", growth_pattern)->required();
  growth->add_option("--N", growth_N, "truncation order (root also checked at N+10)");
  growth->add_option("--tol", growth_tol, "root agreement tolerance");

  // classify
  auto* classify = app.add_subcommand("classify", "equivalence classes of S_m");
  int classify_m = 0, classify_nmax = -1;
  bool classify_validate = false;
  classify->add_option("m", classify_m)->required();
  classify->add_option("--n-max", classify_nmax, "fingerprint depth");
  classify->add_flag("--validate-orbits", classify_validate,
                     "recompute fingerprints for all symmetry-orbit members");

  // verify
  auto* verify = app.add_subcommand("verify", "check equations and identities");
  verify->require_subcommand(1);
  auto* vode = verify->add_subcommand("ode", "differential equation residual");
  std::string vode_spec, vode_pattern;
  int vode_N = 25;
  vode->add_option("spec", vode_spec, "pattern, p-name, or family:arg")->required();
  vode->add_option("--pattern", vode_pattern, "pattern whose series is tested");
  vode->add_option("--N", vode_N, "series truncation order");

  auto* vid = verify->add_subcommand("identity", "generating function identity");
  std::string vid_name;
  int vid_N = -1, vid_m = 0, vid_s = 0;
  vid->add_option("name", vid_name)->required();
  vid->add_option("--N", vid_N, "comparison order");
  vid->add_option("--m", vid_m);
  vid->add_option("--s", vid_s);

  auto* vpair = verify->add_subcommand("pair", "fingerprint comparison of two patterns");
  std::string vpair_a, vpair_b;
  int vpair_nmax = 18;
  vpair->add_option("sigma", vpair_a)->required();
  vpair->add_option("tau", vpair_b)->required();
  vpair->add_option("--n-max", vpair_nmax);

  auto* vdom = verify->add_subcommand("dominance", "monotone vs non-overlapping avoider counts");
  int vdom_m = 0, vdom_lo = -1, vdom_hi = -1;
  vdom->add_option("--m", vdom_m)->required();
  vdom->add_option("--n-lo", vdom_lo);
  vdom->add_option("--n-hi", vdom_hi);

  auto* vblow = verify->add_subcommand("blowup", "layered 2413 extension lower bound");
  int vblow_ell = 2;
  vblow->add_option("--ell", vblow_ell);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*avoid) return cmd_avoid(cfg, avoid_pattern, avoid_range, avoid_brute);
    if (*clusters) return cmd_clusters(cfg, clusters_pattern, clusters_n, clusters_feet);
    if (*omega) return cmd_omega(cfg, omega_pattern, omega_N < 0 ? cfg.series_N : omega_N, omega_u);
    if (*growth) {
      return cmd_growth(cfg, growth_pattern, growth_N < 0 ? 30 : growth_N,
                        growth_tol < 0 ? cfg.tol : growth_tol);
    }
    if (*classify) return cmd_classify(cfg, classify_m, classify_nmax, classify_validate);
    if (*vode) return cmd_verify_ode(cfg, vode_spec, vode_pattern, vode_N);
    if (*vid) return cmd_verify_identity(cfg, vid_name, vid_N, vid_m, vid_s);
    if (*vpair) return cmd_verify_pair(cfg, vpair_a, vpair_b, vpair_nmax);
    if (*vdom) return cmd_verify_dominance(cfg, vdom_m, vdom_lo, vdom_hi);
    if (*vblow) return cmd_verify_blowup(cfg, vblow_ell);
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const resource_limit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
