#pragma once

#include <cstdint>
#include <vector>

#include "segsub/core.hpp"

namespace segsub {

enum class LceMode {
  Auto,            // quadratic table when |t1|*|t2| <= kQuadraticCellLimit
  QuadraticTable,  // X[i][j] = X[i-1][j-1] + 1 on matches
  SuffixArray,     // SA + LCP + sparse-table RMQ over rev(t1) # rev(t2)
};

/// Answers lcsuf(t1[1..i], t2[1..j]), the length of the longest common suffix
/// of two prefixes, in constant time.
class LcsufIndex {
 public:
  static constexpr std::size_t kQuadraticCellLimit = 1'000'000;

  LcsufIndex(const Text& t1, const Text& t2, LceMode mode = LceMode::Auto);

  /// 0 <= i <= |t1|, 0 <= j <= |t2|; throws std::out_of_range otherwise.
  std::uint32_t query(std::size_t i, std::size_t j) const;

  /// Unchecked query for inner loops.
  std::uint32_t operator()(std::size_t i, std::size_t j) const noexcept {
    return mode_ == LceMode::QuadraticTable ? table_[i * (n2_ + 1) + j] : rmq_query(i, j);
  }

  LceMode mode() const noexcept { return mode_; }
  std::size_t first_size() const noexcept { return n1_; }
  std::size_t second_size() const noexcept { return n2_; }

 private:
  void build_table(const Text& t1, const Text& t2);
  void build_suffix_array(const Text& t1, const Text& t2);
  std::uint32_t rmq_query(std::size_t i, std::size_t j) const noexcept;

  std::size_t n1_;
  std::size_t n2_;
  LceMode mode_;
  std::vector<std::uint32_t> table_;

  std::vector<std::uint32_t> rank_;                   // inverse suffix array
  std::vector<std::vector<std::uint32_t>> sparse_;    // sparse_[k][r] = min lcp[r .. r + 2^k)
  std::vector<std::uint8_t> log2_;
};

/// Suffix array of an integer sequence by prefix doubling.
std::vector<std::uint32_t> build_suffix_array(const std::vector<std::uint32_t>& s);

/// Kasai LCP: lcp[r] = lcp(suffix sa[r-1], suffix sa[r]), lcp[0] = 0.
std::vector<std::uint32_t> build_lcp_array(const std::vector<std::uint32_t>& s,
                                           const std::vector<std::uint32_t>& sa,
                                           const std::vector<std::uint32_t>& rank);

}  // namespace segsub
