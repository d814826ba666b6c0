#pragma once

// Textbook reference routines for tests. None of them share code with the
// library solvers.

#include <algorithm>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace segsub::testing {

inline std::size_t classic_lcs(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j)
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

// Longest common factor by comparing every pair of start positions.
inline std::size_t longest_common_substring(std::string_view a, std::string_view b) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t k = 0;
      while (i + k < a.size() && j + k < b.size() && a[i + k] == b[j + k]) ++k;
      best = std::max(best, k);
    }
  return best;
}

inline std::string random_text(std::mt19937_64& rng, std::size_t length, std::size_t alphabet) {
  std::string s(length, 'a');
  for (auto& c : s) c = static_cast<char>('a' + rng() % alphabet);
  return s;
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + rng() % (hi - lo + 1);
}

}  // namespace segsub::testing
