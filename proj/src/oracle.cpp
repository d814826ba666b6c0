#include "segsub/oracle.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

namespace segsub::oracle {
namespace {

void check_size(const Text& t, const Limits& limits, const char* what) {
  if (t.size() > limits.max_length)
    throw SizeLimitError(std::string(what) + " has length " + std::to_string(t.size()) +
                         ", oracle limit is " + std::to_string(limits.max_length));
}

// Leftmost placement of consecutive pieces of p (cut at `cuts`) into t.
bool embeds_greedily(std::string_view t, std::string_view p, const std::vector<std::size_t>& cuts) {
  std::size_t pos = 0, from = 0;
  for (std::size_t k = 0; k <= cuts.size(); ++k) {
    const std::size_t to = k < cuts.size() ? cuts[k] : p.size();
    const std::string_view piece = p.substr(from, to - from);
    const std::size_t at = t.find(piece, pos);
    if (at == std::string_view::npos) return false;
    pos = at + piece.size();
    from = to;
  }
  return true;
}

// Tries every way to cut p into exactly `pieces` non-empty pieces.
bool any_segmentation_embeds(std::string_view t, std::string_view p, std::size_t pieces,
                             std::vector<std::size_t>& cuts, std::size_t next_cut) {
  if (cuts.size() + 1 == pieces) return embeds_greedily(t, p, cuts);
  const std::size_t remaining = pieces - 1 - cuts.size();
  // Cuts lie in 1..|p|-1; leave room for the cuts still to come.
  for (std::size_t c = next_cut; c + remaining <= p.size(); ++c) {
    cuts.push_back(c);
    const bool ok = any_segmentation_embeds(t, p, pieces, cuts, c + 1);
    cuts.pop_back();
    if (ok) return true;
  }
  return false;
}

bool fits_within(std::string_view t, std::string_view p, std::size_t f) {
  if (p.empty()) return true;
  std::vector<std::size_t> cuts;
  for (std::size_t k = 1; k <= std::min(f, p.size()); ++k)
    if (any_segmentation_embeds(t, p, k, cuts, 1)) return true;
  return false;
}

std::size_t best_common_chain(std::string_view t1, std::string_view t2, std::size_t pos1, std::size_t pos2,
                              std::size_t segments_left) {
  std::size_t best = 0;
  if (segments_left == 0) return best;
  for (std::size_t start = pos1; start < t1.size(); ++start) {
    for (std::size_t end = start + 1; end <= t1.size(); ++end) {
      const std::string_view piece = t1.substr(start, end - start);
      const std::size_t at = t2.find(piece, pos2);
      if (at == std::string_view::npos) break;
      const std::size_t total =
          piece.size() + best_common_chain(t1, t2, end, at + piece.size(), segments_left - 1);
      best = std::max(best, total);
    }
  }
  return best;
}

// Every distinct subsequence of s, by bitmask enumeration.
std::vector<std::string> distinct_subsequences(const std::string& s) {
  std::unordered_set<std::string> seen;
  const std::size_t masks = std::size_t{1} << s.size();
  for (std::size_t mask = 0; mask < masks; ++mask) {
    std::string u;
    for (std::size_t k = 0; k < s.size(); ++k)
      if (mask >> k & 1U) u += s[k];
    seen.insert(std::move(u));
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

bool is_subsequence(std::string_view t, std::string_view p) noexcept {
  std::size_t k = 0;
  for (char c : t)
    if (k < p.size() && p[k] == c) ++k;
  return k == p.size();
}

std::optional<std::size_t> min_segments_bruteforce(const Text& t, const Text& p, Limits limits) {
  check_size(t, limits, "text");
  check_size(p, limits, "pattern");
  if (p.empty()) return 1;
  std::vector<std::size_t> cuts;
  for (std::size_t k = 1; k <= p.size(); ++k)
    if (any_segmentation_embeds(t.view(), p.view(), k, cuts, 1)) return k;
  return std::nullopt;
}

std::size_t slcs_bruteforce(const Text& t1, const Text& t2, Budget f, Limits limits) {
  check_size(t1, limits, "first text");
  check_size(t2, limits, "second text");
  return best_common_chain(t1.view(), t2.view(), 0, 0, f.value());
}

std::size_t indseglcs_bruteforce(const Text& t1, const Text& t2, Budget f1, Budget f2, Limits limits) {
  check_size(t1, limits, "first text");
  check_size(t2, limits, "second text");
  const std::string& shorter = t1.size() <= t2.size() ? t1.str() : t2.str();

  std::vector<std::string> candidates = distinct_subsequences(shorter);
  std::sort(candidates.begin(), candidates.end(),
            [](const std::string& a, const std::string& b) { return a.size() > b.size() || (a.size() == b.size() && a < b); });

  for (const auto& u : candidates)
    if (fits_within(t1.view(), u, f1.value()) && fits_within(t2.view(), u, f2.value())) return u.size();
  return 0;
}

std::vector<std::vector<std::size_t>> indseglcs_bruteforce_all(const Text& t1, const Text& t2, Limits limits) {
  check_size(t1, limits, "first text");
  check_size(t2, limits, "second text");
  const std::size_t cap1 = (t1.size() + 1) / 2 + 1, cap2 = (t2.size() + 1) / 2 + 1;
  const std::string& shorter = t1.size() <= t2.size() ? t1.str() : t2.str();

  const std::vector<std::string> seen = distinct_subsequences(shorter);

  // longest[a][b]: longest u needing exactly a segments in t1 and b in t2
  // (capped at the table edge).
  std::vector<std::vector<std::size_t>> best(cap1, std::vector<std::size_t>(cap2, 0));
  for (const auto& u : seen) {
    const auto need1 = min_segments_bruteforce(t1, Text(u), limits);
    if (!need1) continue;
    const auto need2 = min_segments_bruteforce(t2, Text(u), limits);
    if (!need2) continue;
    if (*need1 > cap1 || *need2 > cap2) continue;
    auto& cell = best[*need1 - 1][*need2 - 1];
    cell = std::max(cell, u.size());
  }
  for (std::size_t a = 0; a < cap1; ++a)
    for (std::size_t b = 0; b < cap2; ++b) {
      if (a > 0) best[a][b] = std::max(best[a][b], best[a - 1][b]);
      if (b > 0) best[a][b] = std::max(best[a][b], best[a][b - 1]);
    }
  return best;
}

bool episode_bruteforce(const Text& t, const Text& p, std::size_t h, Limits limits) {
  check_size(t, limits, "text");
  check_size(p, limits, "pattern");
  if (p.empty()) return true;
  for (std::size_t start = 0; start < t.size(); ++start)
    for (std::size_t len = 1; len <= h && start + len <= t.size(); ++len)
      if (is_subsequence(t.view().substr(start, len), p.view())) return true;
  return false;
}

}  // namespace segsub::oracle
