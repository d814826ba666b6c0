#pragma once

// Segmental LCS: the longest string with a single segmentation of at most f
// segments that embeds into both texts.

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <vector>

#include "segsub/core.hpp"
#include "segsub/lce.hpp"

namespace segsub {

struct SolveStats {
  /// Machine-independent work counter. The baseline counts one per (i, j, h)
  /// cell; the diagonal solver counts one per scan-pointer test.
  std::uint64_t cell_visits = 0;
  /// Answer for every budget 1..f (index h-1).
  std::vector<std::size_t> per_budget;
  /// Diagonals processed per budget (diagonal solver only).
  std::vector<std::size_t> diagonals;
};

/// slcs(t1, t2, f) via the chain recurrence
///   C(i,j,h) = max(C(i,j-1,h), C(i-1,j,h), x + C(i-x, j-x, h-1)),  x = lcsuf.
/// O(f n1 n2) time; two h-layers resident.
std::size_t slcs_baseline(const Text& t1, const Text& t2, Budget f, SolveStats* stats = nullptr,
                          LceMode lce_mode = LceMode::Auto);

/// Sparse per-budget table of L(i,s,h), the shortest t2 prefix length j with
/// slcs(t1[1..i], t2[1..j], h) = s, stored by diagonal d = i - s.
class DiagonalTable {
 public:
  static constexpr std::uint32_t kInfinity = std::numeric_limits<std::uint32_t>::max();

  /// L(i, s, h) for this table's h. s = 0 yields 0; cells outside the stored
  /// prefix of their diagonal are infinite.
  std::uint32_t at(std::size_t i, std::size_t s) const noexcept {
    if (s == 0) return 0;
    if (i < s) return kInfinity;
    const std::size_t d = i - s;
    if (d >= diagonals_.size() || s > diagonals_[d].size()) return kInfinity;
    return diagonals_[d][s - 1];
  }

  std::size_t diagonal_count() const noexcept { return diagonals_.size(); }
  /// Stored cells of diagonal d; element s-1 holds L(d+s, s). The last one
  /// may be the infinite cell that stopped the scan.
  const std::vector<std::uint32_t>& diagonal(std::size_t d) const { return diagonals_.at(d); }

  std::vector<std::uint32_t>& open_diagonal() { return diagonals_.emplace_back(); }

 private:
  std::vector<std::vector<std::uint32_t>> diagonals_;
};

/// slcs(t1, t2, f) by filling L diagonal by diagonal. Requires |t1| <= |t2|;
/// use slcs() to have the texts ordered automatically.
/// If `trace` is non-null it receives the sparse table of every budget.
std::size_t slcs_diagonal(const Text& t1, const Text& t2, Budget f, SolveStats* stats = nullptr,
                          std::vector<DiagonalTable>* trace = nullptr, LceMode lce_mode = LceMode::Auto);

enum class SlcsAlgo { Diagonal, Baseline };

/// Orders the texts so the shorter drives the diagonal dimension and clamps
/// f to the shorter length before solving.
std::size_t slcs(const Text& t1, const Text& t2, Budget f, SlcsAlgo algo = SlcsAlgo::Diagonal,
                 SolveStats* stats = nullptr);

/// Lines `h diag s value` for every stored cell, `inf` for infinite cells.
void dump_diagonal_tables(std::ostream& out, const std::vector<DiagonalTable>& tables);

struct SlcsWitness {
  std::size_t length = 0;
  Segmentation segmentation;
  Embedding in_first;
  Embedding in_second;
};

/// A longest common f-segmental subsequence with its embeddings, by traceback
/// through the full chain table. Memory is O(f n1 n2).
SlcsWitness slcs_witness(const Text& t1, const Text& t2, Budget f);

/// Dense L(i, s, h) for 0 <= i <= n1, 1 <= s <= n1, 1 <= h <= f, derived from
/// the full chain table. Index as table[h-1][i][s-1]; kInfinity where absent.
using DenseShortestPrefixTables = std::vector<std::vector<std::vector<std::uint32_t>>>;
DenseShortestPrefixTables dense_shortest_prefix_tables(const Text& t1, const Text& t2, Budget f);

}  // namespace segsub
