#include "segsub/indseglcs.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace segsub {
namespace {

constexpr int kNegInf = -(1 << 29);

int plus_one(int v) { return v < 0 ? kNegInf : v + 1; }

// Kind 0 is B (count) or B-bar (score); kind 1 is F or F-bar.
struct Move {
  int kind;
  std::size_t param;
};

struct Moves {
  std::array<Move, 2> items{};
  std::size_t size = 0;
  void add(int kind, std::size_t param) { items[size++] = {kind, param}; }
  const Move* begin() const { return items.data(); }
  const Move* end() const { return items.data() + size; }
};

// Predecessors when the last text symbol is not used by the embedding.
Moves skip_moves(TableFamily family, int kind, std::size_t p) {
  Moves m;
  if (family == TableFamily::Count) {
    if (kind == 0) {
      m.add(0, p);
      m.add(1, p);
    } else if (p > 0) {
      m.add(0, p - 1);
      m.add(1, p - 1);
    }
  } else if (kind == 0) {
    if (p > 0) {
      m.add(0, p - 1);
      m.add(1, p);
    } else {
      m.add(0, 0);
      m.add(1, 0);
    }
  }
  return m;
}

// Predecessors when the last text symbol is the last symbol of u.
Moves match_moves(TableFamily family, int kind, std::size_t p) {
  Moves m;
  if (family == TableFamily::Count) {
    if (p == 0) return m;
    if (kind == 0) {
      m.add(0, p - 1);
      m.add(1, p - 1);
    } else {
      m.add(0, p - 1);
      m.add(1, p);
    }
  } else if (kind == 1) {
    if (p > 0) {
      m.add(0, p);
      m.add(1, p - 1);
    } else {
      m.add(0, 0);
      m.add(1, 0);
    }
  }
  return m;
}

// Whether the empty string belongs to the set of kind/p over a prefix of
// length `prefix`.
bool holds_empty(TableFamily family, int kind, std::size_t p, std::size_t prefix) {
  if (family == TableFamily::Count) return kind == 0 || p > 0;
  return kind == 0 && p <= prefix;
}

SideConfig side_config(std::size_t n, long long f, FamilyChoice choice) {
  SideConfig side;
  side.n = n;
  const long long cap = static_cast<long long>((n + 1) / 2);
  side.f = static_cast<std::size_t>(std::clamp<long long>(f, 0, cap));
  const long long slack = std::max<long long>(0, static_cast<long long>(n) - 2 * static_cast<long long>(side.f));
  switch (choice) {
    case FamilyChoice::Auto:
      side.family = static_cast<long long>(side.f) <= slack ? TableFamily::Count : TableFamily::Score;
      break;
    case FamilyChoice::Count:
      side.family = TableFamily::Count;
      break;
    case FamilyChoice::Score:
      side.family = TableFamily::Score;
      break;
  }
  side.range = side.family == TableFamily::Count ? side.f : static_cast<std::size_t>(slack);
  side.target = side.range;
  return side;
}

}  // namespace

SideConfig make_side_config(std::size_t n, Budget f, FamilyChoice choice) {
  return side_config(n, static_cast<long long>(f.value()), choice);
}

std::size_t indseglcs(const Text& t1, const Text& t2, Budget f1, Budget f2, const IndSegOptions& options) {
  const SideConfig a = side_config(t1.size(), static_cast<long long>(f1.value()), options.first);
  const SideConfig b = side_config(t2.size(), static_cast<long long>(f2.value()), options.second);
  const SideConfig first =
      options.clamp_bias == 0 ? a
                              : side_config(t1.size(), static_cast<long long>(a.f) + options.clamp_bias, options.first);
  const SideConfig& second = b;

  const std::size_t n1 = first.n, n2 = second.n;
  const std::size_t g1 = first.range + 1, g2 = second.range + 1;
  const std::size_t layer_size = (n2 + 1) * g1 * g2;
  auto idx = [g1, g2](std::size_t i2, std::size_t p1, std::size_t p2) { return (i2 * g1 + p1) * g2 + p2; };

  // layer[k1][k2] holds L_{k1 k2}[i1, *, *, *] for one i1.
  using Layer = std::array<std::array<std::vector<int>, 2>, 2>;
  auto make_layer = [&] {
    Layer layer;
    for (auto& row : layer)
      for (auto& table : row) table.assign(layer_size, kNegInf);
    return layer;
  };
  Layer prev = make_layer(), cur = make_layer();

  for (std::size_t i1 = 0; i1 <= n1; ++i1) {
    for (std::size_t i2 = 0; i2 <= n2; ++i2) {
      const bool boundary = i1 == 0 || i2 == 0;
      const bool match = !boundary && t1[i1 - 1] == t2[i2 - 1];
      for (int k1 = 0; k1 < 2; ++k1) {
        for (int k2 = 0; k2 < 2; ++k2) {
          for (std::size_t p1 = 0; p1 < g1; ++p1) {
            for (std::size_t p2 = 0; p2 < g2; ++p2) {
              int best = kNegInf;
              if (boundary) {
                const bool empty_ok = holds_empty(first.family, k1, p1, i1) && holds_empty(second.family, k2, p2, i2);
                best = empty_ok ? 0 : kNegInf;
              } else {
                for (const Move& m : skip_moves(second.family, k2, p2))
                  best = std::max(best, cur[k1][m.kind][idx(i2 - 1, p1, m.param)]);
                for (const Move& m : skip_moves(first.family, k1, p1))
                  best = std::max(best, prev[m.kind][k2][idx(i2, m.param, p2)]);
                if (match) {
                  const Moves left = match_moves(first.family, k1, p1);
                  const Moves right = match_moves(second.family, k2, p2);
                  for (const Move& m1 : left)
                    for (const Move& m2 : right)
                      best = std::max(best, plus_one(prev[m1.kind][m2.kind][idx(i2 - 1, m1.param, m2.param)]));
                }
              }
              cur[k1][k2][idx(i2, p1, p2)] = best;
            }
          }
        }
      }
    }
    std::swap(prev, cur);
  }

  int answer = kNegInf;
  for (int k1 = 0; k1 < 2; ++k1)
    for (int k2 = 0; k2 < 2; ++k2) answer = std::max(answer, prev[k1][k2][idx(n2, first.target, second.target)]);
  if (answer < 0) throw std::logic_error("indseglcs: empty string not admitted by final tables");
  return static_cast<std::size_t>(answer);
}

long long segmentation_score(const std::vector<std::string>& factorization) {
  if (factorization.empty()) return 0;
  long long score = static_cast<long long>(factorization.front().size());
  for (std::size_t k = 1; k < factorization.size(); ++k) score += static_cast<long long>(factorization[k].size()) - 1;
  return score;
}

}  // namespace segsub
