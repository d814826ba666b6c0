#pragma once

// Segment-constrained subsequence matching: the minimum number of segments
// needed to embed a pattern into a text, and the linear-time decision
// procedure for budgets of at most two.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "segsub/core.hpp"

namespace segsub {

/// Full D/E cost tables of the block-deletion dynamic program, kept for
/// debugging and table dumps. Entries equal to `infinity` are unreachable.
struct MinSegTables {
  std::size_t n = 0;  // text length
  std::size_t m = 0;  // pattern length
  std::uint32_t infinity = 0;
  std::vector<std::uint32_t> d;  // row-major (n+1) x (m+1)
  std::vector<std::uint32_t> e;

  std::uint32_t D(std::size_t i, std::size_t j) const { return d[i * (m + 1) + j]; }
  std::uint32_t E(std::size_t i, std::size_t j) const { return e[i * (m + 1) + j]; }
};

/// Smallest f with p in SegSub^f(t), or nullopt when p is not a subsequence
/// of t. O(|t||p|) time, O(|p|) space.
std::optional<std::size_t> min_segments(const Text& t, const Text& p);

MinSegTables min_segments_tables(const Text& t, const Text& p);

/// Tab-separated dump: a "D" block then an "E" block, one table row per line,
/// `inf` for unreachable cells.
void dump_tables(std::ostream& out, const MinSegTables& tables);

enum class SegeAlgo { Auto, Dp, Kmp2 };

/// Decides p in SegSub^f(t). Auto uses substring search for f = 1, the
/// two-pass automaton method for f = 2 and the dynamic program otherwise.
/// Kmp2 requires f <= 2.
bool sege(const Text& t, const Text& p, Budget f, SegeAlgo algo = SegeAlgo::Auto);

/// Knuth-Morris-Pratt automaton over a fixed pattern.
class KmpAutomaton {
 public:
  explicit KmpAutomaton(std::string_view pattern);

  std::size_t pattern_size() const noexcept { return pattern_.size(); }

  /// Consumes one symbol from `state` (the length of the currently matched
  /// pattern prefix) and returns the new state. A full match falls back
  /// through the failure link before consuming.
  std::size_t step(std::size_t state, unsigned char symbol) const noexcept;

 private:
  std::string pattern_;
  std::vector<std::size_t> failure_;  // failure_[k] = longest proper border of pattern[0..k)
};

/// lpf[i]: longest prefix of p ending at text position i. Element k of the
/// result holds position k+1.
std::vector<std::size_t> compute_lpf(const Text& t, const Text& p);

/// lsf[i]: longest suffix of p starting at text position i. Element k of the
/// result holds position k+1.
std::vector<std::size_t> compute_lsf(const Text& t, const Text& p);

/// Running maximum of lpf.
std::vector<std::size_t> compute_llpf(const Text& t, const Text& p);

/// (position, value) pairs at which llpf strictly increases; 1-based
/// positions, at most |p| entries.
using LlpfBreakpoints = std::vector<std::pair<std::size_t, std::size_t>>;
LlpfBreakpoints compute_llpf_breakpoints(const Text& t, const Text& p);

/// Expands breakpoints back to a dense llpf array of length n.
std::vector<std::size_t> expand_llpf(const LlpfBreakpoints& breakpoints, std::size_t n);

/// p in SegSub^2(t) in O(|t|+|p|) time with O(|p|) extra space.
bool seg2_linear(const Text& t, const Text& p);

}  // namespace segsub
