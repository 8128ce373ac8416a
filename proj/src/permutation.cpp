#include "cpav/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace cpav {

namespace {

void check_bijection(const std::vector<int>& e) {
  const int n = static_cast<int>(e.size());
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int v : e) {
    if (v < 1 || v > n || seen[v]) {
      throw invalid_input("permutation entries must be a bijection onto {1..n}");
    }
    seen[v] = 1;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  check_bijection(entries_);
}

Permutation Permutation::identity(int n) {
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
  if (text.empty()) throw invalid_input("empty pattern text");
  std::vector<int> e;
  if (text.find(',') != std::string_view::npos) {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t next = text.find(',', pos);
      std::string_view tok = text.substr(pos, next == std::string_view::npos ? next : next - pos);
      int v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || p != tok.data() + tok.size()) {
        throw invalid_input("bad pattern token: '" + std::string(tok) + "'");
      }
      e.push_back(v);
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw invalid_input("bad pattern character");
      e.push_back(ch - '0');
    }
  }
  return Permutation(std::move(e));
}

std::string Permutation::str() const {
  std::string out;
  const bool digits = size() <= 9;
  for (int i = 0; i < size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

Permutation Permutation::reversed() const {
  std::vector<int> e(entries_.rbegin(), entries_.rend());
  return Permutation(std::move(e));
}

Permutation Permutation::complemented() const {
  const int n = size();
  std::vector<int> e(entries_.size());
  for (size_t i = 0; i < entries_.size(); ++i) e[i] = n + 1 - entries_[i];
  return Permutation(std::move(e));
}

Permutation Permutation::inverse() const {
  std::vector<int> e(entries_.size());
  for (int i = 0; i < size(); ++i) e[entries_[i] - 1] = i + 1;
  return Permutation(std::move(e));
}

Permutation reduce(std::span<const int> word) {
  const int k = static_cast<int>(word.size());
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return word[a] < word[b]; });
  std::vector<int> e(k);
  for (int r = 0; r < k; ++r) {
    if (r > 0 && word[idx[r]] == word[idx[r - 1]]) {
      throw invalid_input("reduce: duplicate entries");
    }
    e[idx[r]] = r + 1;
  }
  for (int v : word) {
    if (v < 1) throw invalid_input("reduce: entries must be positive");
  }
  return Permutation(std::move(e));
}

std::vector<int> occurrences(const Permutation& p, const Permutation& sigma) {
  std::vector<int> out;
  const int n = p.size();
  const int m = sigma.size();
  if (m < 2) throw invalid_input("pattern length must be at least 2");
  if (n < m) return out;
  const Permutation inv = sigma.inverse();
  for (int i = 0; i + m <= n; ++i) {
    bool ok = true;
    for (int l = 0; l + 1 < m && ok; ++l) {
      ok = p.at(i + inv.at(l) - 1) < p.at(i + inv.at(l + 1) - 1);
    }
    if (ok) out.push_back(i + 1);
  }
  return out;
}

int count_occurrences(const Permutation& p, const Permutation& sigma) {
  return static_cast<int>(occurrences(p, sigma).size());
}

std::vector<int> overlap_set(const Permutation& sigma) {
  const int m = sigma.size();
  if (m < 2) throw invalid_input("pattern length must be at least 2");
  std::vector<int> out;
  for (int i = 1; i < m; ++i) {
    const int len = m - i;  // shared window length
    bool iso = true;
    for (int a = 0; a < len && iso; ++a) {
      for (int b = a + 1; b < len && iso; ++b) {
        iso = (sigma.at(i + a) < sigma.at(i + b)) == (sigma.at(a) < sigma.at(b));
      }
    }
    if (iso) out.push_back(i);
  }
  return out;
}

bool is_non_overlapping(const Permutation& sigma) {
  const auto o = overlap_set(sigma);
  return o.size() == 1 && o[0] == sigma.size() - 1;
}

mpq_class nonoverlapping_fraction(int m, const Config& cfg) {
  if (m < 2) throw invalid_input("m must be at least 2");
  const int cap = std::max(8, cfg.brute_cap - 2);
  if (m > cap) throw resource_limit("nonoverlapping_fraction: m exceeds cap");
  mpz_class hits = 0;
  mpz_class total = 1;
  for (int i = 2; i <= m; ++i) total *= i;
  for (const auto& sigma : all_permutations(m)) {
    if (is_non_overlapping(sigma)) ++hits;
  }
  mpq_class q(hits, total);
  q.canonicalize();
  return q;
}

PatternSet::PatternSet(std::vector<Permutation> patterns) : patterns_(std::move(patterns)) {
  if (patterns_.empty()) throw invalid_input("pattern set must be nonempty");
  for (const auto& p : patterns_) {
    if (p.size() < 2) throw invalid_input("patterns must have length at least 2");
  }
  for (size_t i = 0; i < patterns_.size(); ++i) {
    for (size_t j = i + 1; j < patterns_.size(); ++j) {
      if (patterns_[i] == patterns_[j]) throw invalid_input("duplicate pattern in set");
    }
  }
}

PatternSet::PatternSet(Permutation single) : PatternSet(std::vector<Permutation>{std::move(single)}) {}

PatternSet PatternSet::parse(std::string_view text) {
  std::vector<Permutation> ps;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t next = text.find(';', pos);
    std::string_view tok = text.substr(pos, next == std::string_view::npos ? next : next - pos);
    ps.push_back(Permutation::parse(tok));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return PatternSet(std::move(ps));
}

int PatternSet::min_length() const {
  int m = patterns_[0].size();
  for (const auto& p : patterns_) m = std::min(m, p.size());
  return m;
}

int PatternSet::max_length() const {
  int m = patterns_[0].size();
  for (const auto& p : patterns_) m = std::max(m, p.size());
  return m;
}

std::string PatternSet::str() const {
  std::string out;
  for (size_t i = 0; i < patterns_.size(); ++i) {
    if (i > 0) out += ';';
    out += patterns_[i].str();
  }
  return out;
}

std::string PatternSet::canonical_key() const {
  std::vector<std::string> parts;
  parts.reserve(patterns_.size());
  for (const auto& p : patterns_) parts.push_back(p.str());
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ';';
    out += parts[i];
  }
  return out;
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<int> e(m);
  std::iota(e.begin(), e.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(e));
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

}  // namespace cpav
