#include "segsub/segmatch.hpp"

#include <algorithm>
#include <ostream>

namespace segsub {
namespace {

std::uint32_t saturating_inc(std::uint32_t v, std::uint32_t infinity) {
  return v >= infinity ? infinity : v + 1;
}

std::uint32_t infinity_for(std::size_t n, std::size_t m) {
  return static_cast<std::uint32_t>(n + m + 1);
}

}  // namespace

std::optional<std::size_t> min_segments(const Text& t, const Text& p) {
  const std::size_t n = t.size();
  const std::size_t m = p.size();
  if (m == 0) return 1;

  const std::uint32_t inf = infinity_for(n, m);
  // Rolling rows i-1 and i of both tables.
  std::vector<std::uint32_t> d_prev(m + 1, inf), e_prev(m + 1, inf);
  std::vector<std::uint32_t> d_cur(m + 1), e_cur(m + 1);
  d_prev[0] = e_prev[0] = 0;

  std::uint32_t best = inf;
  for (std::size_t i = 1; i <= n; ++i) {
    d_cur[0] = e_cur[0] = 0;
    const unsigned char ti = t[i - 1];
    for (std::size_t j = 1; j <= m; ++j) {
      const std::uint32_t dij = std::min(d_prev[j], saturating_inc(e_prev[j], inf));
      d_cur[j] = dij;
      e_cur[j] = ti == p[j - 1] ? std::min(e_prev[j - 1], dij) : dij;
    }
    best = std::min(best, e_cur[m]);
    std::swap(d_prev, d_cur);
    std::swap(e_prev, e_cur);
  }
  if (best >= inf) return std::nullopt;
  return static_cast<std::size_t>(best) + 1;
}

MinSegTables min_segments_tables(const Text& t, const Text& p) {
  MinSegTables tables;
  tables.n = t.size();
  tables.m = p.size();
  tables.infinity = infinity_for(tables.n, tables.m);
  const std::size_t n = tables.n, m = tables.m, inf = tables.infinity;
  tables.d.assign((n + 1) * (m + 1), tables.infinity);
  tables.e.assign((n + 1) * (m + 1), tables.infinity);
  auto at = [m](std::size_t i, std::size_t j) { return i * (m + 1) + j; };

  for (std::size_t i = 0; i <= n; ++i) tables.d[at(i, 0)] = tables.e[at(i, 0)] = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::uint32_t dij =
          std::min(tables.d[at(i - 1, j)], saturating_inc(tables.e[at(i - 1, j)], static_cast<std::uint32_t>(inf)));
      tables.d[at(i, j)] = dij;
      tables.e[at(i, j)] = t[i - 1] == p[j - 1] ? std::min(tables.e[at(i - 1, j - 1)], dij) : dij;
    }
  }
  return tables;
}

void dump_tables(std::ostream& out, const MinSegTables& tables) {
  auto block = [&](const char* name, auto&& cell) {
    out << name << '\n';
    for (std::size_t i = 0; i <= tables.n; ++i) {
      for (std::size_t j = 0; j <= tables.m; ++j) {
        if (j) out << '\t';
        const std::uint32_t v = cell(i, j);
        if (v >= tables.infinity)
          out << "inf";
        else
          out << v;
      }
      out << '\n';
    }
  };
  block("D", [&](std::size_t i, std::size_t j) { return tables.D(i, j); });
  block("E", [&](std::size_t i, std::size_t j) { return tables.E(i, j); });
}

KmpAutomaton::KmpAutomaton(std::string_view pattern) : pattern_(pattern), failure_(pattern.size() + 1, 0) {
  for (std::size_t k = 1, border = 0; k < pattern_.size(); ++k) {
    while (border > 0 && pattern_[k] != pattern_[border]) border = failure_[border];
    if (pattern_[k] == pattern_[border]) ++border;
    failure_[k + 1] = border;
  }
}

std::size_t KmpAutomaton::step(std::size_t state, unsigned char symbol) const noexcept {
  if (pattern_.empty()) return 0;
  if (state == pattern_.size()) state = failure_[state];
  while (state > 0 && static_cast<unsigned char>(pattern_[state]) != symbol) state = failure_[state];
  if (static_cast<unsigned char>(pattern_[state]) == symbol) ++state;
  return state;
}

std::vector<std::size_t> compute_lpf(const Text& t, const Text& p) {
  const KmpAutomaton automaton(p.view());
  std::vector<std::size_t> lpf(t.size(), 0);
  std::size_t state = 0;
  for (std::size_t i = 0; i < t.size(); ++i) lpf[i] = state = automaton.step(state, t[i]);
  return lpf;
}

std::vector<std::size_t> compute_lsf(const Text& t, const Text& p) {
  const KmpAutomaton automaton(p.reversed().view());
  std::vector<std::size_t> lsf(t.size(), 0);
  std::size_t state = 0;
  for (std::size_t i = t.size(); i-- > 0;) lsf[i] = state = automaton.step(state, t[i]);
  return lsf;
}

std::vector<std::size_t> compute_llpf(const Text& t, const Text& p) {
  auto llpf = compute_lpf(t, p);
  for (std::size_t i = 1; i < llpf.size(); ++i) llpf[i] = std::max(llpf[i], llpf[i - 1]);
  return llpf;
}

LlpfBreakpoints compute_llpf_breakpoints(const Text& t, const Text& p) {
  const KmpAutomaton automaton(p.view());
  LlpfBreakpoints breakpoints;
  std::size_t state = 0, running_max = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    state = automaton.step(state, t[i]);
    if (state > running_max) {
      running_max = state;
      breakpoints.emplace_back(i + 1, running_max);
    }
  }
  return breakpoints;
}

std::vector<std::size_t> expand_llpf(const LlpfBreakpoints& breakpoints, std::size_t n) {
  std::vector<std::size_t> llpf(n, 0);
  std::size_t next = 0, value = 0;
  for (std::size_t pos = 1; pos <= n; ++pos) {
    while (next < breakpoints.size() && breakpoints[next].first == pos) value = breakpoints[next++].second;
    llpf[pos - 1] = value;
  }
  return llpf;
}

bool seg2_linear(const Text& t, const Text& p) {
  const std::size_t n = t.size(), m = p.size();
  if (m == 0) return true;
  if (n == 0) return false;

  // Pass 1: llpf, stored only where it increases.
  const LlpfBreakpoints breakpoints = compute_llpf_breakpoints(t, p);
  if (!breakpoints.empty() && breakpoints.back().second >= m) return true;

  // Pass 2: lsf right to left, never materialized. `bp` tracks the last
  // breakpoint at or before position i, so llpf[i] is its value.
  const KmpAutomaton reverse_automaton(p.reversed().view());
  std::size_t state = 0;
  std::ptrdiff_t bp = static_cast<std::ptrdiff_t>(breakpoints.size()) - 1;
  for (std::size_t i = n - 1; i >= 1; --i) {
    state = reverse_automaton.step(state, t[i]);  // lsf[i+1]
    while (bp >= 0 && breakpoints[static_cast<std::size_t>(bp)].first > i) --bp;
    const std::size_t llpf_i = bp >= 0 ? breakpoints[static_cast<std::size_t>(bp)].second : 0;
    if (llpf_i + state >= m) return true;
  }
  return false;
}

bool sege(const Text& t, const Text& p, Budget f, SegeAlgo algo) {
  switch (algo) {
    case SegeAlgo::Kmp2:
      if (f.value() > 2) throw std::invalid_argument("kmp2 path handles budgets of at most 2");
      return f.value() == 1 ? t.view().find(p.view()) != std::string_view::npos : seg2_linear(t, p);
    case SegeAlgo::Auto:
      if (f.value() == 1) return t.view().find(p.view()) != std::string_view::npos;
      if (f.value() == 2) return seg2_linear(t, p);
      [[fallthrough]];
    case SegeAlgo::Dp: {
      const auto needed = min_segments(t, p);
      return needed && *needed <= f.value();
    }
  }
  return false;
}

}  // namespace segsub
