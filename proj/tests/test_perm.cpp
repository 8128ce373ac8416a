#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "cpav/brute.hpp"
#include "cpav/permutation.hpp"
#include "doctest.h"

using namespace cpav;

namespace {

Permutation random_pattern(std::mt19937& rng, int m) {
  std::vector<int> e(m);
  std::iota(e.begin(), e.end(), 1);
  std::shuffle(e.begin(), e.end(), rng);
  return Permutation(std::move(e));
}

}  // namespace

TEST_CASE("reduce") {
  const std::vector<int> w1{4, 6, 3, 8, 2};
  CHECK(reduce(w1).str() == "34251");
  const std::vector<int> w2{1, 2, 3};
  CHECK(reduce(w2).str() == "123");
  const std::vector<int> w3{5, 9, 2};
  CHECK(reduce(w3).str() == "231");
  const std::vector<int> dup{3, 3, 1};
  CHECK_THROWS_AS(reduce(dup), invalid_input);
}

TEST_CASE("reversal and complement") {
  const Permutation p = Permutation::parse("1324");
  CHECK(p.reversed().str() == "4231");
  CHECK(p.complemented().str() == "4231");

  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Permutation q = random_pattern(rng, 2 + trial % 7);
    CHECK(q.reversed().reversed() == q);
    CHECK(q.complemented().complemented() == q);
    CHECK(q.inverse().inverse() == q);
  }
}

TEST_CASE("pattern text round trip") {
  CHECK(Permutation::parse("1324").str() == "1324");
  const Permutation big = Permutation::parse("10,1,2,3,4,5,6,7,8,9");
  CHECK(big.size() == 10);
  CHECK(big.str() == "10,1,2,3,4,5,6,7,8,9");
  CHECK(Permutation::parse(big.str()) == big);
  CHECK_THROWS_AS(Permutation::parse("1325"), invalid_input);
  CHECK_THROWS_AS(Permutation::parse(""), invalid_input);
}

TEST_CASE("occurrences") {
  const Permutation p = Permutation::parse("142536879");
  CHECK(occurrences(p, Permutation::parse("1324")) == std::vector<int>{1, 3, 6});
  CHECK(occurrences(Permutation::parse("123"), Permutation::parse("132")).empty());
  CHECK(occurrences(Permutation::parse("1234"), Permutation::parse("123")) ==
        std::vector<int>{1, 2});
}

TEST_CASE("overlap sets") {
  CHECK(overlap_set(Permutation::parse("1324")) == std::vector<int>{2, 3});
  CHECK(overlap_set(Permutation::parse("13254")) == std::vector<int>{2, 4});
  for (int m = 2; m <= 7; ++m) {
    std::vector<int> all;
    for (int i = 1; i < m; ++i) all.push_back(i);
    CHECK(overlap_set(Permutation::identity(m)) == all);
  }

  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Permutation q = random_pattern(rng, 3 + trial % 5);
    const auto o = overlap_set(q);
    CHECK(o.back() == q.size() - 1);
    CHECK(overlap_set(q.reversed()) == o);
    CHECK(overlap_set(q.complemented()) == o);
  }
}

TEST_CASE("non-overlapping classification") {
  CHECK_FALSE(is_non_overlapping(Permutation::parse("1324")));
  CHECK(is_non_overlapping(Permutation::parse("132")));
  CHECK(is_non_overlapping(Permutation::parse("1243")));
  CHECK(nonoverlapping_fraction(2) == mpq_class(1));
  CHECK(nonoverlapping_fraction(3) == mpq_class(2, 3));
  CHECK(nonoverlapping_fraction(4) >= mpq_class(364, 1000));
  CHECK_THROWS_AS(nonoverlapping_fraction(30), resource_limit);
}

TEST_CASE("brute avoiders") {
  const PatternSet p123(Permutation::parse("123"));
  CHECK(brute_avoiders(p123, 2) == 2);
  CHECK(brute_avoiders(p123, 3) == 5);
  CHECK(brute_avoiders(p123, 4) == 17);
  CHECK(brute_avoiders(p123, 5) == 70);
  CHECK(brute_avoiders(p123, 6) == 349);
  Config tight;
  tight.brute_cap = 5;
  CHECK_THROWS_AS(brute_avoiders(p123, 7, tight), resource_limit);
}

TEST_CASE("brute distribution") {
  const Permutation s123 = Permutation::parse("123");
  const UDistribution d3 = brute_distribution(s123, 3);
  CHECK(d3.coefficients.at(0) == 5);
  CHECK(d3.coefficients.at(1) == 1);
  const UDistribution d4 = brute_distribution(s123, 4);
  CHECK(d4.coefficients.at(0) == 17);
  CHECK(d4.coefficients.at(1) == 6);
  CHECK(d4.coefficients.at(2) == 1);
  const UDistribution below = brute_distribution(Permutation::parse("1234"), 3);
  CHECK(below.coefficients.at(0) == 6);
  CHECK(below.coefficients.size() == 1);
}

TEST_CASE("distribution invariants over small patterns") {
  mpz_class fact = 1;
  std::vector<mpz_class> factorials{1};
  for (int n = 1; n <= 7; ++n) {
    fact *= n;
    factorials.push_back(fact);
  }
  for (int m : {3, 4}) {
    for (const auto& sigma : all_permutations(m)) {
      for (int n = 1; n <= 7; ++n) {
        const UDistribution d = brute_distribution(sigma, n);
        CHECK(d.total() == factorials[n]);
        CHECK(d == brute_distribution(sigma.reversed(), n));
        CHECK(d == brute_distribution(sigma.complemented(), n));
      }
    }
  }
}

TEST_CASE("parallel kernels match serial reference") {
  const Permutation sigma = Permutation::parse("1324");
  for (int n = 1; n <= 8; ++n) {
    CHECK(brute_distribution(sigma, n) == brute_distribution_serial(sigma, n));
  }
  const PatternSet two(std::vector<Permutation>{Permutation::parse("132"),
                                                Permutation::parse("1234")});
  for (int n = 1; n <= 8; ++n) {
    CHECK(brute_avoiders(two, n) == brute_avoiders_serial(two, n));
  }
}

TEST_CASE("pattern set validation") {
  CHECK_THROWS_AS(PatternSet(std::vector<Permutation>{}), invalid_input);
  CHECK_THROWS_AS(PatternSet(Permutation::parse("1")), invalid_input);
  CHECK_THROWS_AS(PatternSet(std::vector<Permutation>{Permutation::parse("132"),
                                                      Permutation::parse("132")}),
                  invalid_input);
  const PatternSet ps = PatternSet::parse("231;132");
  CHECK(ps.str() == "231;132");
  CHECK(ps.canonical_key() == "132;231");
}
