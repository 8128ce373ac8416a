#include "cpav/json_io.hpp"

#include <cstdio>

using nlohmann::json;

namespace cpav {

std::string rat_str(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();
}

std::string float17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

json upoly_json(const UPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(rat_str(c));
  return arr;
}

template <typename Series>
json series_json_impl(const Series& s) {
  json j;
  j["N"] = s.N;
  json coeffs = json::array();
  for (int n = 0; n <= s.N; ++n) coeffs.push_back(upoly_json(s.coeff(n)));
  j["coeffs"] = coeffs;
  return j;
}

}  // namespace

json series_json(const EgfSeries& s) { return series_json_impl(s); }
json series_json(const OgfSeries& s) { return series_json_impl(s); }

json cluster_json(const ClusterPolynomial& r) {
  json j = json::object();
  for (const auto& [k, v] : r.coeffs) j[std::to_string(k)] = v.get_str();
  return j;
}

json feet_json(const FeetTable& t) {
  json j;
  j["n"] = t.n;
  j["k"] = t.k;
  json by = json::object();
  for (const auto& [l, v] : t.by_feet) by[std::to_string(l)] = v.get_str();
  j["by_feet"] = by;
  return j;
}

json layout_json(const OccurrenceLayout& l) {
  bool single = true;
  for (const auto& mk : l.marks) single = single && mk.pattern == 0;
  if (single) {
    json arr = json::array();
    for (const auto& mk : l.marks) arr.push_back(mk.start);
    return arr;
  }
  json arr = json::array();
  for (const auto& mk : l.marks) arr.push_back(json{{"start", mk.start}, {"pattern", mk.pattern}});
  return arr;
}

json partition_json(const ClassPartition& p) {
  json j;
  j["m"] = p.m;
  j["n_max"] = p.n_max;
  json classes = json::array();
  for (const auto& cls : p.classes) {
    json members = json::array();
    for (const auto& sigma : cls) members.push_back(sigma.str());
    classes.push_back(members);
  }
  j["classes"] = classes;
  return j;
}

json growth_json(const GrowthReport& g) {
  json j;
  j["pattern"] = g.pattern.str();
  j["status"] = g.status;
  j["source"] = g.source;
  j["N_lo"] = g.N_lo;
  j["N_hi"] = g.N_hi;
  j["bracket"] = {float17(g.bracket_lo), float17(g.bracket_hi)};
  j["entire_proven"] = g.entire_proven;
  j["tol"] = float17(g.tol);
  if (g.status == "ok") {
    j["z0"] = float17(g.z0);
    j["rho"] = float17(g.rho);
    j["gap"] = float17(g.gap);
  }
  return j;
}

json dominance_json(const DominanceReport& d) {
  json j;
  j["m"] = d.m;
  j["n_lo"] = d.n_lo;
  j["n_hi"] = d.n_hi;
  j["monotone"] = d.monotone.str();
  j["conjectured_low"] = d.conjectured_low.str();
  j["conjectured_high"] = d.conjectured_high.str();
  j["patterns"] = d.patterns;
  json rows = json::array();
  for (const auto& row : d.rows) {
    json r;
    r["n"] = row.n;
    r["alpha_monotone"] = row.alpha_monotone.get_str();
    json a = json::object();
    for (const auto& [p, v] : row.alpha) a[p] = v.get_str();
    r["alpha"] = a;
    rows.push_back(r);
  }
  j["rows"] = rows;
  json dom = json::object();
  for (const auto& [p, v] : d.dominated) dom[p] = v;
  j["dominated"] = dom;
  json conj = json::object();
  for (const auto& [p, v] : d.conjecture_in_range) conj[p] = v;
  j["conjecture_in_range"] = conj;
  j["all_dominated"] = d.all_dominated;
  return j;
}

json blowup_json(const BlowupReport& b) {
  json j;
  j["ell"] = b.ell;
  j["n"] = b.n;
  j["layout"] = layout_json(b.layout);
  j["count"] = b.count.get_str();
  j["bound"] = b.bound.get_str();
  j["pass"] = b.pass;
  j["layer_sizes"] = b.layer_sizes;
  j["layers_ok"] = b.layers_ok;
  return j;
}

}  // namespace cpav
