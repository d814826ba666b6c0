#include "segsub/lce.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace segsub {

std::vector<std::uint32_t> build_suffix_array(const std::vector<std::uint32_t>& s) {
  const std::size_t n = s.size();
  std::vector<std::uint32_t> sa(n), rank(s.begin(), s.end()), next(n);
  std::iota(sa.begin(), sa.end(), 0U);
  if (n <= 1) return sa;

  for (std::size_t width = 1;; width *= 2) {
    auto key = [&](std::uint32_t i) {
      const std::uint64_t second = i + width < n ? std::uint64_t{rank[i + width]} + 1 : 0;
      return (std::uint64_t{rank[i]} << 32) | second;
    };
    std::sort(sa.begin(), sa.end(), [&](std::uint32_t a, std::uint32_t b) { return key(a) < key(b); });
    next[sa[0]] = 0;
    for (std::size_t r = 1; r < n; ++r) next[sa[r]] = next[sa[r - 1]] + (key(sa[r - 1]) < key(sa[r]) ? 1 : 0);
    rank.swap(next);
    if (rank[sa[n - 1]] == n - 1) break;
  }
  return sa;
}

std::vector<std::uint32_t> build_lcp_array(const std::vector<std::uint32_t>& s,
                                           const std::vector<std::uint32_t>& sa,
                                           const std::vector<std::uint32_t>& rank) {
  const std::size_t n = s.size();
  std::vector<std::uint32_t> lcp(n, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t prev = sa[rank[i] - 1];
    while (i + h < n && prev + h < n && s[i + h] == s[prev + h]) ++h;
    lcp[rank[i]] = static_cast<std::uint32_t>(h);
    if (h > 0) --h;
  }
  return lcp;
}

LcsufIndex::LcsufIndex(const Text& t1, const Text& t2, LceMode mode) : n1_(t1.size()), n2_(t2.size()), mode_(mode) {
  if (mode_ == LceMode::Auto)
    mode_ = n1_ * n2_ <= kQuadraticCellLimit ? LceMode::QuadraticTable : LceMode::SuffixArray;
  if (mode_ == LceMode::QuadraticTable)
    build_table(t1, t2);
  else
    build_suffix_array(t1, t2);
}

void LcsufIndex::build_table(const Text& t1, const Text& t2) {
  table_.assign((n1_ + 1) * (n2_ + 1), 0);
  for (std::size_t i = 1; i <= n1_; ++i)
    for (std::size_t j = 1; j <= n2_; ++j)
      if (t1[i - 1] == t2[j - 1]) table_[i * (n2_ + 1) + j] = table_[(i - 1) * (n2_ + 1) + j - 1] + 1;
}

void LcsufIndex::build_suffix_array(const Text& t1, const Text& t2) {
  // rev(t1) # rev(t2) with symbols shifted by one so that 0 is the separator.
  std::vector<std::uint32_t> s;
  s.reserve(n1_ + n2_ + 1);
  for (std::size_t k = n1_; k-- > 0;) s.push_back(std::uint32_t{t1[k]} + 1);
  s.push_back(0);
  for (std::size_t k = n2_; k-- > 0;) s.push_back(std::uint32_t{t2[k]} + 1);

  const auto sa = segsub::build_suffix_array(s);
  rank_.assign(s.size(), 0);
  for (std::size_t r = 0; r < sa.size(); ++r) rank_[sa[r]] = static_cast<std::uint32_t>(r);
  auto lcp = build_lcp_array(s, sa, rank_);

  const std::size_t n = s.size();
  log2_.assign(n + 1, 0);
  for (std::size_t k = 2; k <= n; ++k) log2_[k] = static_cast<std::uint8_t>(log2_[k / 2] + 1);
  sparse_.clear();
  sparse_.push_back(std::move(lcp));
  for (std::size_t k = 1; (std::size_t{1} << k) <= n; ++k) {
    const auto& below = sparse_[k - 1];
    const std::size_t half = std::size_t{1} << (k - 1);
    std::vector<std::uint32_t> level(n - (std::size_t{1} << k) + 1);
    for (std::size_t r = 0; r < level.size(); ++r) level[r] = std::min(below[r], below[r + half]);
    sparse_.push_back(std::move(level));
  }
}

std::uint32_t LcsufIndex::rmq_query(std::size_t i, std::size_t j) const noexcept {
  if (i == 0 || j == 0) return 0;
  // Prefix t1[1..i] reversed starts at offset n1 - i; t2[1..j] at n1 + 1 + n2 - j.
  std::size_t a = rank_[n1_ - i];
  std::size_t b = rank_[n1_ + 1 + n2_ - j];
  if (a > b) std::swap(a, b);
  const std::size_t lo = a + 1, len = b - a;
  const std::size_t k = log2_[len];
  return std::min(sparse_[k][lo], sparse_[k][b + 1 - (std::size_t{1} << k)]);
}

std::uint32_t LcsufIndex::query(std::size_t i, std::size_t j) const {
  if (i > n1_ || j > n2_)
    throw std::out_of_range("lcsuf query (" + std::to_string(i) + ", " + std::to_string(j) + ") outside " +
                            std::to_string(n1_) + " x " + std::to_string(n2_));
  return (*this)(i, j);
}

}  // namespace segsub
