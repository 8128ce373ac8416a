#include "cpav/layout.hpp"

#include <algorithm>

namespace cpav {

std::vector<int> OccurrenceLayout::starts() const {
  std::vector<int> out;
  out.reserve(marks.size());
  for (const auto& mk : marks) out.push_back(mk.start);
  return out;
}

namespace {

// order-isomorphism of sigma's suffix of length `len` with tau's prefix
bool overlap_consistent(const Permutation& sigma, const Permutation& tau, int len) {
  const int shift = sigma.size() - len;
  for (int a = 0; a < len; ++a) {
    for (int b = a + 1; b < len; ++b) {
      if ((sigma.at(shift + a) < sigma.at(shift + b)) != (tau.at(a) < tau.at(b))) return false;
    }
  }
  return true;
}

struct GapTable {
  // allowed[p][q] = sorted gaps g such that a mark of pattern q may follow a
  // mark of pattern p at distance g
  std::vector<std::vector<std::vector<int>>> allowed;

  explicit GapTable(const PatternSet& ps) {
    const int s = ps.size();
    allowed.assign(s, std::vector<std::vector<int>>(s));
    for (int p = 0; p < s; ++p) {
      for (int q = 0; q < s; ++q) {
        const int mp = ps[p].size();
        const int mq = ps[q].size();
        for (int g = 1; g <= mp - 1; ++g) {
          if (g + mq <= mp) continue;  // next window must end strictly later
          if (overlap_consistent(ps[p], ps[q], mp - g)) allowed[p][q].push_back(g);
        }
      }
    }
  }
};

struct Enumerator {
  const PatternSet& ps;
  GapTable gaps;
  OccurrenceLayout cur;

  explicit Enumerator(const PatternSet& p) : ps(p), gaps(p) {}

  // exact length n
  void run_exact(int n, const std::function<void(const OccurrenceLayout&)>& visit) {
    for (int p = 0; p < ps.size(); ++p) {
      if (ps[p].size() > n) continue;
      cur.marks.push_back({1, p});
      extend_exact(n, ps[p].size(), p, visit);
      cur.marks.pop_back();
    }
  }

  void extend_exact(int n, int end, int last_pat,
                    const std::function<void(const OccurrenceLayout&)>& visit) {
    if (end == n) {
      cur.length = n;
      visit(cur);
      return;
    }
    const int start = cur.marks.back().start;
    for (int q = 0; q < ps.size(); ++q) {
      for (int g : gaps.allowed[last_pat][q]) {
        const int nend = start + g + ps[q].size() - 1;
        if (nend > n) continue;
        cur.marks.push_back({start + g, q});
        extend_exact(n, nend, q, visit);
        cur.marks.pop_back();
      }
    }
  }

  // all lengths <= n_max, lexicographic; emits each prefix as a layout
  bool run_upto(int n_max, const std::function<bool(const OccurrenceLayout&)>& visit) {
    for (int p = 0; p < ps.size(); ++p) {
      if (ps[p].size() > n_max) continue;
      cur.marks.push_back({1, p});
      const bool go = extend_upto(n_max, ps[p].size(), p, visit);
      cur.marks.pop_back();
      if (!go) return false;
    }
    return true;
  }

  bool extend_upto(int n_max, int end, int last_pat,
                   const std::function<bool(const OccurrenceLayout&)>& visit) {
    cur.length = end;
    if (!visit(cur)) return false;
    const int start = cur.marks.back().start;
    for (int q = 0; q < ps.size(); ++q) {
      for (int g : gaps.allowed[last_pat][q]) {
        const int nend = start + g + ps[q].size() - 1;
        if (nend > n_max) continue;
        cur.marks.push_back({start + g, q});
        const bool go = extend_upto(n_max, nend, q, visit);
        cur.marks.pop_back();
        if (!go) return false;
      }
    }
    return true;
  }
};

}  // namespace

void for_each_layout(const PatternSet& patterns, int n,
                     const std::function<void(const OccurrenceLayout&)>& visit) {
  if (n < patterns.min_length()) return;
  Enumerator e(patterns);
  e.run_exact(n, visit);
}

std::vector<OccurrenceLayout> enumerate_layouts(const PatternSet& patterns, int n) {
  std::vector<OccurrenceLayout> out;
  for_each_layout(patterns, n, [&](const OccurrenceLayout& l) { out.push_back(l); });
  return out;
}

void for_each_layout_upto(const PatternSet& patterns, int n_max,
                          const std::function<bool(const OccurrenceLayout&)>& visit) {
  Enumerator e(patterns);
  e.run_upto(n_max, visit);
}

void validate_layout(const PatternSet& patterns, const OccurrenceLayout& layout) {
  if (layout.marks.empty()) throw invalid_input("layout: no marks");
  if (layout.marks.front().start != 1) throw invalid_input("layout: first start must be 1");
  int prev_end = 0;
  for (size_t j = 0; j < layout.marks.size(); ++j) {
    const auto& mk = layout.marks[j];
    if (mk.pattern < 0 || mk.pattern >= patterns.size()) {
      throw invalid_input("layout: pattern index out of range");
    }
    const int m = patterns[mk.pattern].size();
    const int end = mk.start + m - 1;
    if (j > 0) {
      const auto& pm = layout.marks[j - 1];
      const int pm_len = patterns[pm.pattern].size();
      if (mk.start <= pm.start) throw invalid_input("layout: starts must strictly increase");
      if (end <= prev_end) throw invalid_input("layout: ends must strictly increase");
      if (mk.start > prev_end) throw invalid_input("layout: neighboring marks must overlap");
      const int shared = prev_end - mk.start + 1;
      if (!overlap_consistent(patterns[pm.pattern], patterns[mk.pattern], shared)) {
        throw invalid_input("layout: overlapping marks are order-inconsistent");
      }
      (void)pm_len;
    }
    prev_end = end;
  }
  if (prev_end != layout.length) throw invalid_input("layout: last mark must end at the total length");
}

}  // namespace cpav
