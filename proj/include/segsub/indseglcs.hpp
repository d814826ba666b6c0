#pragma once

// Longest common subsequence under independent segment budgets: the longest u
// with u in SegSub^f1(t1) and u in SegSub^f2(t2), where the two embeddings may
// use different segmentations of u.

#include <string>
#include <vector>

#include "segsub/core.hpp"

namespace segsub {

/// Which pair of table kinds tracks one text.
///  Count: B = SegSub^p and F = SegSuf^p (last segment is a suffix), with p
///         the number of segments, 0 <= p <= f.
///  Score: B-bar and F-bar, where p is a lower bound on the factorization
///         score, 0 <= p <= max(0, n - 2f).
enum class TableFamily { Count, Score };

enum class FamilyChoice { Auto, Count, Score };

struct SideConfig {
  std::size_t n = 0;
  std::size_t f = 0;  // budget after clamping to ceil(n / 2)
  TableFamily family = TableFamily::Count;
  std::size_t range = 0;  // largest table parameter
  std::size_t target = 0; // parameter at which the answer is read
};

SideConfig make_side_config(std::size_t n, Budget f, FamilyChoice choice = FamilyChoice::Auto);

struct IndSegOptions {
  FamilyChoice first = FamilyChoice::Auto;
  FamilyChoice second = FamilyChoice::Auto;
  /// Mutation-testing hook: added to the clamped budget of the first text.
  /// Must stay 0 outside fault-injection runs.
  int clamp_bias = 0;
};

/// O(g1 g2 n1 n2) dynamic program over four tables.
std::size_t indseglcs(const Text& t1, const Text& t2, Budget f1, Budget f2, const IndSegOptions& options = {});

/// S(w0, ..., wm) = |w0| + sum_{k>=1} (|wk| - 1). Negative when interior
/// pieces are empty.
long long segmentation_score(const std::vector<std::string>& factorization);

}  // namespace segsub
