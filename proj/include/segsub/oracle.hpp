#pragma once

// Exponential-time reference implementations. They enumerate segmentations
// or subsequences directly and share no code with the polynomial solvers, so
// they serve as ground truth in property and differential tests.

#include <optional>
#include <stdexcept>
#include <vector>

#include "segsub/core.hpp"

namespace segsub::oracle {

struct Limits {
  std::size_t max_length = 14;
};

class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Smallest f with p in SegSub^f(t), found by enumerating segmentations of p
/// in order of size and placing each one greedily; nullopt if none embeds.
std::optional<std::size_t> min_segments_bruteforce(const Text& t, const Text& p, Limits limits = {});

/// slcs(t1, t2, f) by enumerating every sequence of at most f disjoint factors
/// of t1 and placing it greedily into t2.
std::size_t slcs_bruteforce(const Text& t1, const Text& t2, Budget f, Limits limits = {});

/// Longest u with u in SegSub^f1(t1) and u in SegSub^f2(t2), over all distinct
/// subsequences of the shorter text.
std::size_t indseglcs_bruteforce(const Text& t1, const Text& t2, Budget f1, Budget f2, Limits limits = {});

/// indseglcs_bruteforce for every budget pair at once: element [f1-1][f2-1]
/// for 1 <= f_a <= ceil(|t_a|/2) + 1.
std::vector<std::vector<std::size_t>> indseglcs_bruteforce_all(const Text& t1, const Text& t2, Limits limits = {});

/// Whether some factor of t of length <= h contains p as a subsequence.
bool episode_bruteforce(const Text& t, const Text& p, std::size_t h, Limits limits = {});

/// Classic subsequence test.
bool is_subsequence(std::string_view t, std::string_view p) noexcept;

}  // namespace segsub::oracle
