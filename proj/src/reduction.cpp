#include "segsub/reduction.hpp"

#include <stdexcept>
#include <string>

#include "segsub/segmatch.hpp"

namespace segsub {
namespace {

void require_binary(const Text& s, const char* what) {
  for (char c : s.view())
    if (c != '0' && c != '1') throw std::invalid_argument(std::string(what) + " must be over {0,1}");
}

std::string repeat(std::string_view unit, std::size_t times) {
  std::string out;
  out.reserve(unit.size() * times);
  for (std::size_t k = 0; k < times; ++k) out += unit;
  return out;
}

}  // namespace

EpisodeReduction build_episode_reduction(const Text& t, const Text& p, std::size_t h) {
  require_binary(t, "episode text");
  require_binary(p, "episode pattern");
  const std::size_t n = t.size(), m = p.size();
  if (n == 0 || m == 0) throw std::invalid_argument("episode text and pattern must be non-empty");
  if (h < 1 || h > n)
    throw std::invalid_argument("window bound " + std::to_string(h) + " outside 1.." + std::to_string(n));

  const std::string sep(1, kReductionSeparator);
  const std::string pair = sep + sep;

  std::string text = repeat(sep + "0", 2 * n - 2);
  for (char c : t.view()) {
    text += pair;
    text += c;
  }
  text += pair;
  text += repeat("0" + sep, 2 * n - 2);

  std::string pattern = repeat(sep, 2 * n) + p.str() + repeat(sep, 2 * n);
  return {Text(std::move(text)), Text(std::move(pattern)), 3 * n + m + h - 4};
}

bool check_reduction_equivalence(const Text& t, const Text& p, std::size_t h, oracle::Limits limits) {
  const bool episode = oracle::episode_bruteforce(t, p, h, limits);
  const auto reduced = build_episode_reduction(t, p, h);
  const bool segmental = sege(reduced.text, reduced.pattern, Budget(static_cast<long long>(reduced.segments)));
  return episode == segmental;
}

}  // namespace segsub
