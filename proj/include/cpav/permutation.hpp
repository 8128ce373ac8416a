#pragma once

#include <gmpxx.h>

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cpav/common.hpp"

namespace cpav {

/// A permutation in one-line notation; entries are a bijection onto {1..n}.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);

  /// Text forms: contiguous digits for length <= 9 ("1324"),
  /// comma-separated otherwise ("10,1,2,3,4,5,6,7,8,9").
  static Permutation parse(std::string_view text);
  std::string str() const;

  int size() const { return static_cast<int>(entries_.size()); }
  int at(int pos) const { return entries_[pos]; }  // 0-based position, value in 1..n
  const std::vector<int>& entries() const { return entries_; }

  Permutation reversed() const;
  Permutation complemented() const;
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> entries_;
};

/// Relabel a sequence of distinct positive integers to {1..k}, preserving order.
Permutation reduce(std::span<const int> word);

/// 1-based start positions i with reduce(p_i..p_{i+m-1}) = sigma.
std::vector<int> occurrences(const Permutation& p, const Permutation& sigma);
int count_occurrences(const Permutation& p, const Permutation& sigma);

/// Shifts i in {1..m-1} at which sigma can overlap itself; m-1 always qualifies.
std::vector<int> overlap_set(const Permutation& sigma);
bool is_non_overlapping(const Permutation& sigma);

/// Exact fraction of non-overlapping patterns in S_m (census; m small).
mpq_class nonoverlapping_fraction(int m, const Config& cfg = {});

/// Nonempty ordered list of distinct patterns, each of length >= 2.
class PatternSet {
 public:
  explicit PatternSet(std::vector<Permutation> patterns);
  explicit PatternSet(Permutation single);

  static PatternSet parse(std::string_view text);  // patterns joined by ';'

  int size() const { return static_cast<int>(patterns_.size()); }
  const Permutation& operator[](int i) const { return patterns_[i]; }
  const std::vector<Permutation>& patterns() const { return patterns_; }
  int min_length() const;
  int max_length() const;

  std::string str() const;            // members in given order, ';'-joined
  std::string canonical_key() const;  // members sorted, ';'-joined

  bool operator==(const PatternSet&) const = default;

 private:
  std::vector<Permutation> patterns_;
};

std::vector<Permutation> all_permutations(int m);

}  // namespace cpav
