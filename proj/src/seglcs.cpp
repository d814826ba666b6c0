#include "segsub/seglcs.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace segsub {
namespace {

using Layer = std::vector<std::uint32_t>;

// Fills layer h of the chain table from layer h-1. Row 0 and column 0 of
// `cur` must already be zero.
void fill_chain_layer(const LcsufIndex& lce, std::size_t n1, std::size_t n2, const Layer& prev, Layer& cur) {
  const std::size_t w = n2 + 1;
  for (std::size_t i = 1; i <= n1; ++i) {
    for (std::size_t j = 1; j <= n2; ++j) {
      const std::uint32_t x = lce(i, j);
      const std::uint32_t chain = x + prev[(i - x) * w + (j - x)];
      cur[i * w + j] = std::max({cur[i * w + j - 1], cur[(i - 1) * w + j], chain});
    }
  }
}

// All layers 0..f of the chain table.
std::vector<Layer> full_chain_table(const Text& t1, const Text& t2, std::size_t f) {
  const std::size_t n1 = t1.size(), n2 = t2.size();
  const LcsufIndex lce(t1, t2);
  std::vector<Layer> layers(f + 1, Layer((n1 + 1) * (n2 + 1), 0));
  for (std::size_t h = 1; h <= f; ++h) fill_chain_layer(lce, n1, n2, layers[h - 1], layers[h]);
  return layers;
}

}  // namespace

std::size_t slcs_baseline(const Text& t1, const Text& t2, Budget f, SolveStats* stats, LceMode lce_mode) {
  const std::size_t n1 = t1.size(), n2 = t2.size();
  if (stats) {
    stats->per_budget.assign(f.value(), 0);
    stats->diagonals.clear();
  }
  if (n1 == 0 || n2 == 0) return 0;

  const LcsufIndex lce(t1, t2, lce_mode);
  const std::size_t w = n2 + 1;
  Layer prev((n1 + 1) * w, 0), cur((n1 + 1) * w, 0);
  for (std::size_t h = 1; h <= f.value(); ++h) {
    fill_chain_layer(lce, n1, n2, prev, cur);
    if (stats) {
      stats->cell_visits += static_cast<std::uint64_t>(n1) * n2;
      stats->per_budget[h - 1] = cur[n1 * w + n2];
    }
    std::swap(prev, cur);
  }
  return prev[n1 * w + n2];
}

std::size_t slcs_diagonal(const Text& t1, const Text& t2, Budget f, SolveStats* stats,
                          std::vector<DiagonalTable>* trace, LceMode lce_mode) {
  const std::size_t n1 = t1.size(), n2 = t2.size();
  if (n1 > n2) throw std::invalid_argument("slcs_diagonal expects |t1| <= |t2|");
  if (stats) {
    stats->per_budget.assign(f.value(), 0);
    stats->diagonals.assign(f.value(), 0);
  }
  if (trace) trace->clear();
  if (n1 == 0) return 0;

  constexpr std::uint32_t inf = DiagonalTable::kInfinity;
  const LcsufIndex lce(t1, t2, lce_mode);
  DiagonalTable lower;  // an empty table is the virtual h = 0 level
  std::size_t max_row = 0;
  std::uint64_t visits = 0;

  for (std::size_t h = 1; h <= f.value(); ++h) {
    DiagonalTable table;
    max_row = 0;
    std::size_t diag = 0;
    for (; diag < n1 - max_row; ++diag) {
      auto& cells = table.open_diagonal();
      std::size_t j = 1;
      bool reached_bottom = true;
      for (std::size_t s = 1; s <= n1 - diag; ++s) {
        const std::size_t i = s + diag;
        const std::uint32_t above = table.at(i - 1, s);
        std::uint32_t value = inf;
        for (; j <= n2; ++j) {
          ++visits;
          if (j == above) {
            value = static_cast<std::uint32_t>(j);
            break;
          }
          // The last segment can be at most s long.
          const std::size_t x = std::min<std::size_t>(lce(i, j), s);
          if (x > 0) {
            const std::uint32_t rest = lower.at(i - x, s - x);
            if (rest != inf && j >= x + rest) {
              value = static_cast<std::uint32_t>(j);
              break;
            }
          }
        }
        cells.push_back(value);
        if (value == inf) {
          max_row = std::max(max_row, s - 1);
          reached_bottom = false;
          break;
        }
        ++j;
      }
      if (reached_bottom) max_row = std::max(max_row, n1 - diag);
    }
    if (stats) {
      stats->per_budget[h - 1] = max_row;
      stats->diagonals[h - 1] = diag;
    }
    if (trace) trace->push_back(table);
    lower = std::move(table);
  }
  if (stats) stats->cell_visits += visits;
  return max_row;
}

std::size_t slcs(const Text& t1, const Text& t2, Budget f, SlcsAlgo algo, SolveStats* stats) {
  const Text& shorter = t1.size() <= t2.size() ? t1 : t2;
  const Text& longer = t1.size() <= t2.size() ? t2 : t1;
  const Budget clamped(static_cast<long long>(std::min(f.value(), std::max<std::size_t>(1, shorter.size()))));
  return algo == SlcsAlgo::Diagonal ? slcs_diagonal(shorter, longer, clamped, stats)
                                    : slcs_baseline(shorter, longer, clamped, stats);
}

void dump_diagonal_tables(std::ostream& out, const std::vector<DiagonalTable>& tables) {
  for (std::size_t h = 1; h <= tables.size(); ++h) {
    const auto& table = tables[h - 1];
    for (std::size_t d = 0; d < table.diagonal_count(); ++d) {
      const auto& cells = table.diagonal(d);
      for (std::size_t s = 1; s <= cells.size(); ++s) {
        out << h << ' ' << d << ' ' << s << ' ';
        if (cells[s - 1] == DiagonalTable::kInfinity)
          out << "inf";
        else
          out << cells[s - 1];
        out << '\n';
      }
    }
  }
}

SlcsWitness slcs_witness(const Text& t1, const Text& t2, Budget f) {
  const std::size_t n1 = t1.size(), n2 = t2.size(), w = n2 + 1;
  const auto layers = full_chain_table(t1, t2, f.value());
  const LcsufIndex lce(t1, t2);

  SlcsWitness witness;
  witness.length = layers[f.value()][n1 * w + n2];

  struct Piece {
    std::size_t start1, start2, length;
  };
  std::vector<Piece> pieces;
  std::size_t i = n1, j = n2, h = f.value();
  while (h > 0 && i > 0 && j > 0) {
    const auto& layer = layers[h];
    const std::uint32_t here = layer[i * w + j];
    if (here == 0) break;
    if (here == layer[i * w + j - 1]) {
      --j;
    } else if (here == layer[(i - 1) * w + j]) {
      --i;
    } else {
      const std::uint32_t x = lce(i, j);
      if (x > 0) pieces.push_back({i - x + 1, j - x + 1, x});
      i -= x;
      j -= x;
      --h;
    }
  }
  std::reverse(pieces.begin(), pieces.end());

  if (pieces.empty()) {
    witness.segmentation.segments = {""};
    witness.in_first = {witness.segmentation, {1}};
    witness.in_second = {witness.segmentation, {1}};
    return witness;
  }
  for (const auto& piece : pieces) {
    witness.segmentation.segments.emplace_back(t1.slice(piece.start1, piece.start1 + piece.length - 1));
    witness.in_first.starts.push_back(piece.start1);
    witness.in_second.starts.push_back(piece.start2);
  }
  witness.in_first.segmentation = witness.segmentation;
  witness.in_second.segmentation = witness.segmentation;
  return witness;
}

DenseShortestPrefixTables dense_shortest_prefix_tables(const Text& t1, const Text& t2, Budget f) {
  const std::size_t n1 = t1.size(), n2 = t2.size(), w = n2 + 1;
  const auto layers = full_chain_table(t1, t2, f.value());
  DenseShortestPrefixTables tables(f.value(),
                                   std::vector<std::vector<std::uint32_t>>(
                                       n1 + 1, std::vector<std::uint32_t>(n1, DiagonalTable::kInfinity)));
  for (std::size_t h = 1; h <= f.value(); ++h) {
    for (std::size_t i = 0; i <= n1; ++i) {
      for (std::size_t s = 1; s <= n1; ++s) {
        for (std::size_t j = 0; j <= n2; ++j) {
          if (layers[h][i * w + j] >= s) {
            tables[h - 1][i][s - 1] = static_cast<std::uint32_t>(j);
            break;
          }
        }
      }
    }
  }
  return tables;
}

}  // namespace segsub
