#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cpav/common.hpp"
#include "cpav/layout.hpp"
#include "cpav/permutation.hpp"

namespace cpav {

/// Strict partial order on positions 0..n-1 (n <= 64), stored as bitmasks of
/// generating edges. The generating edges always include every cover relation,
/// which is all the extension counter and the chain tests need; the full
/// reachability closure is materialized only on demand.
class ClusterPoset {
 public:
  static constexpr int kMaxN = 64;

  ClusterPoset() { reset(0); }
  explicit ClusterPoset(int n) { reset(n); }

  void reset(int n);
  int size() const { return n_; }

  void add_relation(int lo, int hi);  // position lo carries the smaller value

  uint64_t succ(int v) const { return succ_[v]; }
  uint64_t pred(int v) const { return pred_[v]; }
  uint64_t universe() const { return n_ == 64 ? ~uint64_t{0} : ((uint64_t{1} << n_) - 1); }

  /// True iff the order is total (unique topological order).
  bool is_chain() const;

  /// 1-based heights (longest chain ending at each element); throws on cycles.
  std::vector<int> heights() const;
  int longest_chain() const;

  bool comparable(int a, int b) const;
  uint64_t above(int v) const;  // full reachability, computed lazily

  const std::optional<OccurrenceLayout>& layout() const { return layout_; }
  void set_layout(OccurrenceLayout l) { layout_ = std::move(l); }

 private:
  void ensure_closure() const;

  int n_ = 0;
  std::array<uint64_t, kMaxN> succ_{};
  std::array<uint64_t, kMaxN> pred_{};
  mutable bool closed_ = false;
  mutable std::array<uint64_t, kMaxN> above_{};
  std::optional<OccurrenceLayout> layout_;
};

/// Closes the per-mark chains pi_{inv_1+i-1} < ... < pi_{inv_m+i-1} into one order.
ClusterPoset build_cluster_poset(const PatternSet& patterns, const OccurrenceLayout& layout);
void build_cluster_poset_into(const PatternSet& patterns, const OccurrenceLayout& layout,
                              ClusterPoset& out, bool validate = true);

/// Exact number of linear extensions, by dynamic programming over down-sets:
/// f(S) = sum over maximal v of f(S \ {v}), memoized on the down-set bitmask.
mpz_class count_linear_extensions(const ClusterPoset& poset, const Config& cfg = {});

struct ChainVerdict {
  bool chain_up_to = false;              // true: all layouts of length <= n_max gave chains
  int n_max = 0;
  std::optional<OccurrenceLayout> witness;  // lexicographically least non-chain layout
};

/// Bounded evidence only: a NotChain witness is conclusive, ChainUpTo is not.
ChainVerdict chain_pattern_verdict(const Permutation& sigma, int n_max = -1,
                                   const Config& cfg = {});

}  // namespace cpav
