#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>

#include "cpav/poset.hpp"
#include "doctest.h"

using namespace cpav;

namespace {

OccurrenceLayout single_pattern_layout(const PatternSet& ps, std::vector<int> starts) {
  OccurrenceLayout l;
  for (int s : starts) l.marks.push_back({s, 0});
  l.length = starts.back() + ps[0].size() - 1;
  return l;
}

// counts permutations of S_n whose marked windows are all occurrences
long brute_extension_count(const PatternSet& ps, const OccurrenceLayout& layout) {
  const int n = layout.length;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  long count = 0;
  do {
    bool ok = true;
    for (const auto& mk : layout.marks) {
      const Permutation& sigma = ps[mk.pattern];
      const Permutation inv = sigma.inverse();
      for (int r = 0; r + 1 < sigma.size() && ok; ++r) {
        ok = perm[mk.start - 1 + inv.at(r) - 1] < perm[mk.start - 1 + inv.at(r + 1) - 1];
      }
      if (!ok) break;
    }
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

ClusterPoset antichain(int n) { return ClusterPoset(n); }

ClusterPoset chain(int n) {
  ClusterPoset p(n);
  for (int i = 0; i + 1 < n; ++i) p.add_relation(i, i + 1);
  return p;
}

}  // namespace

TEST_CASE("monotone layouts give total orders") {
  const PatternSet ps(Permutation::identity(3));
  const auto layout = single_pattern_layout(ps, {1, 2, 4});
  const ClusterPoset p = build_cluster_poset(ps, layout);
  CHECK(p.size() == 6);
  CHECK(p.is_chain());
  CHECK(p.longest_chain() == 6);
  CHECK(count_linear_extensions(p) == 1);
}

TEST_CASE("1324 layout (1,3) has exactly one incomparable pair") {
  const PatternSet ps(Permutation::parse("1324"));
  const ClusterPoset p = build_cluster_poset(ps, single_pattern_layout(ps, {1, 3}));
  CHECK(p.size() == 6);
  int incomparable = 0;
  std::pair<int, int> pair{-1, -1};
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) {
      if (!p.comparable(a, b)) {
        ++incomparable;
        pair = {a, b};
      }
    }
  }
  CHECK(incomparable == 1);
  CHECK(pair == std::pair<int, int>{1, 4});  // positions 2 and 5, 1-based
  CHECK(p.longest_chain() == 5);
  CHECK(count_linear_extensions(p) == 2);
}

TEST_CASE("2413 layout (1,3) matches the inverse-pattern chains") {
  const PatternSet ps(Permutation::parse("2413"));
  const ClusterPoset p = build_cluster_poset(ps, single_pattern_layout(ps, {1, 3}));
  // chains pi_3 < pi_1 < pi_4 < pi_2 and pi_5 < pi_3 < pi_6 < pi_4
  CHECK(p.comparable(2, 0));
  CHECK(p.comparable(0, 3));
  CHECK(p.comparable(3, 1));
  CHECK(p.comparable(4, 2));
  CHECK(p.comparable(5, 3));
  CHECK_FALSE(p.comparable(0, 5));
  CHECK_FALSE(p.comparable(1, 5));
}

TEST_CASE("extension counts on degenerate posets") {
  CHECK(count_linear_extensions(chain(7)) == 1);
  CHECK(count_linear_extensions(antichain(1)) == 1);
  CHECK(count_linear_extensions(antichain(5)) == 120);
  CHECK(count_linear_extensions(ClusterPoset(0)) == 1);
  Config tight;
  tight.extension_cap = 4;
  CHECK_THROWS_AS(count_linear_extensions(antichain(5), tight), resource_limit);
}

TEST_CASE("Catalan count for dense 1324 layouts") {
  const PatternSet ps(Permutation::parse("1324"));
  const ClusterPoset p = build_cluster_poset(ps, single_pattern_layout(ps, {1, 3, 5}));
  CHECK(p.size() == 8);
  CHECK(count_linear_extensions(p) == 5);
}

TEST_CASE("extension counts agree with direct filtering") {
  struct Case {
    const char* pattern;
    std::vector<int> starts;
  };
  const std::vector<Case> cases{
      {"1324", {1, 3}},   {"1324", {1, 4}},   {"1324", {1, 3, 5}}, {"2413", {1, 3}},
      {"2413", {1, 4}},   {"2143", {1, 3}},   {"2143", {1, 4}},    {"1423", {1, 3, 5}},
      {"132", {1, 3, 5}}, {"123", {1, 2, 3}}, {"321", {1, 3, 4}},  {"1243", {1, 4}},
  };
  for (const auto& c : cases) {
    const PatternSet ps(Permutation::parse(c.pattern));
    const auto layout = single_pattern_layout(ps, c.starts);
    CAPTURE(c.pattern);
    const ClusterPoset p = build_cluster_poset(ps, layout);
    CHECK(count_linear_extensions(p) == brute_extension_count(ps, layout));
  }
}

TEST_CASE("reversal and complement give isomorphic posets") {
  const std::vector<const char*> patterns{"1324", "2413", "2143", "1423", "13254"};
  for (const char* text : patterns) {
    const Permutation sigma = Permutation::parse(text);
    for (const Permutation& tau : {sigma.reversed(), sigma.complemented()}) {
      const PatternSet ps_sigma(sigma);
      const PatternSet ps_tau(tau);
      CHECK(overlap_set(sigma) == overlap_set(tau));
      const auto layouts = enumerate_layouts(ps_sigma, sigma.size() * 2 - 2);
      const auto layouts_tau = enumerate_layouts(ps_tau, sigma.size() * 2 - 2);
      REQUIRE(layouts.size() == layouts_tau.size());
      for (size_t i = 0; i < layouts.size(); ++i) {
        CHECK(count_linear_extensions(build_cluster_poset(ps_sigma, layouts[i])) ==
              count_linear_extensions(build_cluster_poset(ps_tau, layouts_tau[i])));
      }
    }
  }
}

TEST_CASE("longest chain bounds") {
  // first entry 1: every layout keeps a chain through the window bottoms
  for (const char* text : {"1324", "1423", "132", "1243", "1342"}) {
    const Permutation sigma = Permutation::parse(text);
    const PatternSet ps(sigma);
    const int m = sigma.size();
    for (int n = m; n <= 3 * m; ++n) {
      for (const auto& layout : enumerate_layouts(ps, n)) {
        const ClusterPoset p = build_cluster_poset(ps, layout);
        CHECK(p.longest_chain() * m >= n);
      }
    }
  }
  // non-overlapping: chain of length m + (b-a)(k-1)
  for (const char* text : {"132", "1243", "1342", "1432", "13542", "24153"}) {
    const Permutation sigma = Permutation::parse(text);
    REQUIRE(is_non_overlapping(sigma));
    const PatternSet ps(sigma);
    const int m = sigma.size();
    const int a = std::min(sigma.at(0), sigma.at(m - 1));
    const int b = std::max(sigma.at(0), sigma.at(m - 1));
    for (int k = 1; k <= 3; ++k) {
      const int n = k * (m - 1) + 1;
      const auto layouts = enumerate_layouts(ps, n);
      REQUIRE(layouts.size() == 1);
      const ClusterPoset p = build_cluster_poset(ps, layouts[0]);
      CHECK(p.longest_chain() >= m + (b - a) * (k - 1));
    }
  }
}

TEST_CASE("chain pattern verdicts") {
  const ChainVerdict v123 = chain_pattern_verdict(Permutation::parse("123"));
  CHECK(v123.chain_up_to);
  CHECK_FALSE(v123.witness.has_value());

  const ChainVerdict v12435 = chain_pattern_verdict(Permutation::parse("12435"));
  CHECK(v12435.chain_up_to);

  const ChainVerdict v1324 = chain_pattern_verdict(Permutation::parse("1324"));
  CHECK_FALSE(v1324.chain_up_to);
  REQUIRE(v1324.witness.has_value());
  CHECK(v1324.witness->starts() == std::vector<int>{1, 3});

  const ChainVerdict v2413 = chain_pattern_verdict(Permutation::parse("2413"));
  CHECK_FALSE(v2413.chain_up_to);
  CHECK(v2413.witness->starts() == std::vector<int>{1, 3});
}

TEST_CASE("layout validation") {
  const PatternSet ps(Permutation::parse("1324"));
  OccurrenceLayout bad;
  bad.marks = {{2, 0}, {4, 0}};
  bad.length = 7;
  CHECK_THROWS_AS(validate_layout(ps, bad), invalid_input);  // must start at 1

  OccurrenceLayout gap;
  gap.marks = {{1, 0}, {6, 0}};
  gap.length = 9;
  CHECK_THROWS_AS(validate_layout(ps, gap), invalid_input);  // marks must overlap

  OccurrenceLayout wrong_end;
  wrong_end.marks = {{1, 0}, {3, 0}};
  wrong_end.length = 7;
  CHECK_THROWS_AS(validate_layout(ps, wrong_end), invalid_input);

  OccurrenceLayout bad_shift;  // shift 1 is not an overlap of 1324
  bad_shift.marks = {{1, 0}, {2, 0}};
  bad_shift.length = 5;
  CHECK_THROWS_AS(validate_layout(ps, bad_shift), invalid_input);

  OccurrenceLayout good;
  good.marks = {{1, 0}, {3, 0}};
  good.length = 6;
  CHECK_NOTHROW(validate_layout(ps, good));
}
