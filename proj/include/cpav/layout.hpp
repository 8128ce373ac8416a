#pragma once

#include <functional>
#include <vector>

#include "cpav/common.hpp"
#include "cpav/permutation.hpp"

namespace cpav {

/// Marked occurrence starts covering {1..length}, neighbors overlapping.
/// Starts are 1-based; pattern indexes into the originating PatternSet.
struct OccurrenceLayout {
  struct Mark {
    int start = 0;
    int pattern = 0;
    auto operator<=>(const Mark&) const = default;
  };
  std::vector<Mark> marks;
  int length = 0;

  int mark_count() const { return static_cast<int>(marks.size()); }
  std::vector<int> starts() const;

  bool operator==(const OccurrenceLayout&) const = default;
  auto operator<=>(const OccurrenceLayout&) const = default;
};

/// Visits every layout of total length exactly n, in lexicographic order of
/// the (start, pattern) mark sequence. Gap validity between consecutive marks:
/// both endpoints advance and the shared segment is order-isomorphic in the
/// two patterns; for a single pattern this is exactly the overlap set.
void for_each_layout(const PatternSet& patterns, int n,
                     const std::function<void(const OccurrenceLayout&)>& visit);

std::vector<OccurrenceLayout> enumerate_layouts(const PatternSet& patterns, int n);

/// Visits every layout of total length <= n_max (all lengths mixed),
/// lexicographically; the visitor returns false to stop early.
void for_each_layout_upto(const PatternSet& patterns, int n_max,
                          const std::function<bool(const OccurrenceLayout&)>& visit);

/// Throws invalid_input unless the layout satisfies all invariants
/// against the given pattern set.
void validate_layout(const PatternSet& patterns, const OccurrenceLayout& layout);

}  // namespace cpav
