#pragma once

// Reduction from bounded-length episode matching on binary strings to
// segment-constrained subsequence matching over {0, 1, $}.

#include "segsub/core.hpp"
#include "segsub/oracle.hpp"

namespace segsub {

inline constexpr char kReductionSeparator = '$';

struct EpisodeReduction {
  Text text;
  Text pattern;
  std::size_t segments = 0;
};

/// t' = ($0)^(2n-2) $$ t[1] $$ ... $$ t[n] $$ (0$)^(2n-2),
/// p' = $^(2n) p $^(2n),  f = 3n + m + h - 4.
/// Throws std::invalid_argument for non-binary input, empty t or p, or h
/// outside 1..|t|.
EpisodeReduction build_episode_reduction(const Text& t, const Text& p, std::size_t h);

/// Compares the brute-force episode answer with SegE on the reduced instance.
bool check_reduction_equivalence(const Text& t, const Text& p, std::size_t h, oracle::Limits limits = {});

}  // namespace segsub
