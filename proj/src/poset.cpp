#include "cpav/poset.hpp"

#include <bit>
#include <unordered_map>

namespace cpav {

void ClusterPoset::reset(int n) {
  if (n < 0 || n > kMaxN) throw invalid_input("poset size must be in 0..64");
  n_ = n;
  succ_.fill(0);
  pred_.fill(0);
  closed_ = false;
  layout_.reset();
}

void ClusterPoset::add_relation(int lo, int hi) {
  if (lo < 0 || hi < 0 || lo >= n_ || hi >= n_ || lo == hi) {
    throw invalid_input("bad relation endpoints");
  }
  succ_[lo] |= uint64_t{1} << hi;
  pred_[hi] |= uint64_t{1} << lo;
  closed_ = false;
}

bool ClusterPoset::is_chain() const {
  if (n_ <= 1) return true;
  uint64_t remaining = universe();
  while (remaining) {
    int min_v = -1;
    uint64_t r = remaining;
    while (r) {
      const int v = std::countr_zero(r);
      r &= r - 1;
      if ((pred_[v] & remaining) == 0) {
        if (min_v >= 0) return false;  // two minimal elements
        min_v = v;
      }
    }
    if (min_v < 0) return false;  // cyclic
    remaining &= ~(uint64_t{1} << min_v);
  }
  return true;
}

std::vector<int> ClusterPoset::heights() const {
  std::vector<int> h(n_, 0);
  uint64_t remaining = universe();
  while (remaining) {
    uint64_t level = 0;
    uint64_t r = remaining;
    while (r) {
      const int v = std::countr_zero(r);
      r &= r - 1;
      if ((pred_[v] & remaining) == 0) level |= uint64_t{1} << v;
    }
    if (!level) throw invalid_input("poset has a cycle");
    uint64_t l = level;
    while (l) {
      const int v = std::countr_zero(l);
      l &= l - 1;
      int hv = 1;
      uint64_t p = pred_[v];
      while (p) {
        const int w = std::countr_zero(p);
        p &= p - 1;
        hv = std::max(hv, h[w] + 1);
      }
      h[v] = hv;
    }
    remaining &= ~level;
  }
  return h;
}

int ClusterPoset::longest_chain() const {
  if (n_ == 0) return 0;
  int best = 0;
  for (int hv : heights()) best = std::max(best, hv);
  return best;
}

void ClusterPoset::ensure_closure() const {
  if (closed_) return;
  // reverse topological sweep: above(v) = direct successors plus their closures
  std::vector<int> order;
  order.reserve(n_);
  std::vector<int> indeg(n_, 0);
  for (int v = 0; v < n_; ++v) indeg[v] = std::popcount(pred_[v]);
  std::vector<int> stack;
  for (int v = 0; v < n_; ++v) {
    if (indeg[v] == 0) stack.push_back(v);
  }
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    uint64_t s = succ_[v];
    while (s) {
      const int w = std::countr_zero(s);
      s &= s - 1;
      if (--indeg[w] == 0) stack.push_back(w);
    }
  }
  if (static_cast<int>(order.size()) != n_) throw invalid_input("poset has a cycle");
  above_.fill(0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    uint64_t acc = succ_[v];
    uint64_t s = succ_[v];
    while (s) {
      const int w = std::countr_zero(s);
      s &= s - 1;
      acc |= above_[w];
    }
    above_[v] = acc;
  }
  closed_ = true;
}

bool ClusterPoset::comparable(int a, int b) const {
  ensure_closure();
  return ((above_[a] >> b) & 1) || ((above_[b] >> a) & 1);
}

uint64_t ClusterPoset::above(int v) const {
  ensure_closure();
  return above_[v];
}

void build_cluster_poset_into(const PatternSet& patterns, const OccurrenceLayout& layout,
                              ClusterPoset& out, bool validate) {
  if (validate) validate_layout(patterns, layout);
  out.reset(layout.length);
  for (const auto& mk : layout.marks) {
    const Permutation& sigma = patterns[mk.pattern];
    const Permutation inv = sigma.inverse();
    const int base = mk.start - 1;
    for (int r = 0; r + 1 < sigma.size(); ++r) {
      out.add_relation(base + inv.at(r) - 1, base + inv.at(r + 1) - 1);
    }
  }
}

ClusterPoset build_cluster_poset(const PatternSet& patterns, const OccurrenceLayout& layout) {
  if (layout.length > ClusterPoset::kMaxN) {
    throw resource_limit("cluster poset larger than 64 positions");
  }
  ClusterPoset p;
  build_cluster_poset_into(patterns, layout, p);
  p.set_layout(layout);
  return p;
}

namespace {

struct ExtensionCounter {
  const ClusterPoset& poset;
  std::unordered_map<uint64_t, mpz_class> memo;

  explicit ExtensionCounter(const ClusterPoset& p) : poset(p) { memo.reserve(256); }

  mpz_class count(uint64_t down_set) {
    if (down_set == 0) return 1;
    auto it = memo.find(down_set);
    if (it != memo.end()) return it->second;
    mpz_class total = 0;
    uint64_t s = down_set;
    while (s) {
      const int v = std::countr_zero(s);
      s &= s - 1;
      if ((poset.succ(v) & down_set) == 0) {
        total += count(down_set & ~(uint64_t{1} << v));
      }
    }
    return memo.emplace(down_set, std::move(total)).first->second;
  }
};

}  // namespace

mpz_class count_linear_extensions(const ClusterPoset& poset, const Config& cfg) {
  if (poset.size() > cfg.extension_cap) {
    throw resource_limit("count_linear_extensions: poset exceeds extension cap");
  }
  if (poset.size() == 0) return 1;
  if (poset.is_chain()) return 1;
  ExtensionCounter c(poset);
  return c.count(poset.universe());
}

ChainVerdict chain_pattern_verdict(const Permutation& sigma, int n_max, const Config& cfg) {
  const int m = sigma.size();
  if (m < 3) throw invalid_input("chain verdict needs pattern length at least 3");
  if (n_max < 0) n_max = 3 * m;
  if (n_max > cfg.extension_cap * 2 && n_max > 48) {
    throw resource_limit("chain_pattern_verdict: n_max too large");
  }
  ChainVerdict verdict;
  verdict.n_max = n_max;
  verdict.chain_up_to = true;
  const PatternSet ps(sigma);
  ClusterPoset scratch;
  for_each_layout_upto(ps, n_max, [&](const OccurrenceLayout& layout) {
    build_cluster_poset_into(ps, layout, scratch, /*validate=*/false);
    if (!scratch.is_chain()) {
      verdict.chain_up_to = false;
      verdict.witness = layout;
      return false;
    }
    return true;
  });
  return verdict;
}

}  // namespace cpav
