// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "segsub/harness.hpp"
#include "segsub/indseglcs.hpp"
#include "segsub/lce.hpp"
#include "segsub/oracle.hpp"
#include "segsub/reduction.hpp"
#include "segsub/segmatch.hpp"
#include "segsub/seglcs.hpp"
#include "support.hpp"

using namespace segsub;
using segsub::testing::classic_lcs;
using segsub::testing::longest_common_substring;
using segsub::testing::random_text;
using segsub::testing::uniform;

namespace {

// Pinned limits.
constexpr double kGoldenTable1Seconds = 1.0;
constexpr double kOracleSeconds = 300.0;
constexpr double kTrendSeconds = 120.0;
constexpr std::size_t kOracleCases = 10'000;
constexpr std::size_t kOracleMaxLength = 10;
constexpr std::size_t kOracleMaxAlphabet = 3;
constexpr std::size_t kDegenerateCases = 1'000;
constexpr std::size_t kDegenerateMaxLength = 60;
constexpr std::size_t kLceGridMaxLength = 200;
constexpr std::size_t kRecurrenceMaxLength = 12;
constexpr double kTrendTolerance = 1.5;
constexpr std::size_t kTrendBudget = 4;
constexpr std::size_t kTrendMaxGap = 2;  // n1 - ell on the similarity family
const std::vector<std::size_t> kTrendSizes{1000, 2000, 4000, 8000};

constexpr std::uint32_t I = DiagonalTable::kInfinity;
constexpr std::uint32_t _ = 0;  // blank: cell not computed

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

int failures = 0;

void report(int number, const std::string& name, const std::function<void(Outcome&)>& body) {
  Outcome outcome;
  const auto start = Clock::now();
  try {
    body(outcome);
  } catch (const std::exception& e) {
    outcome.require(false, std::string("exception: ") + e.what());
  }
  const double elapsed = seconds_since(start);
  if (!outcome.pass) ++failures;
  std::printf("criterion %d: %s %s (%.2fs)%s%s\n", number, outcome.pass ? "PASS" : "FAIL", name.c_str(), elapsed,
              outcome.detail.str().empty() ? "" : " : ", outcome.detail.str().c_str());
  std::fflush(stdout);
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::ostringstream out;
  for (std::size_t k = 0; k < values.size(); ++k) out << (k ? "," : "") << values[k];
  return out.str();
}

// ---------------------------------------------------------------------------

void golden_border_arrays(Outcome& o) {
  const auto start = Clock::now();
  const Text t("baacababbabcaacaabcba"), p("abbabaca");
  using Row = std::vector<std::size_t>;
  const Row lpf{0, 1, 1, 0, 1, 2, 1, 2, 3, 4, 5, 0, 1, 1, 0, 1, 1, 2, 0, 0, 1};
  const Row llpf{0, 1, 1, 1, 1, 2, 2, 2, 3, 4, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5};
  const Row lsf{0, 1, 3, 2, 1, 0, 1, 0, 0, 1, 0, 2, 1, 3, 2, 1, 1, 0, 0, 0, 1};
  o.require(compute_lpf(t, p) == lpf, "lpf row " + join(compute_lpf(t, p)));
  o.require(compute_llpf(t, p) == llpf, "llpf row " + join(compute_llpf(t, p)));
  o.require(compute_lsf(t, p) == lsf, "lsf row " + join(compute_lsf(t, p)));
  o.require(expand_llpf(compute_llpf_breakpoints(t, p), t.size()) == llpf, "llpf breakpoints");
  o.require(seg2_linear(t, p), "seg2_linear returned false");
  o.require(min_segments(t, p) == 2u, "minsege != 2");
  o.require(seconds_since(start) < kGoldenTable1Seconds, "over time limit");
}

// Non-blank entries of the sparse tables: [h][s][i], rows s = 1..8.
const std::uint32_t kSparse[3][8][8] = {
    {{8, 1, 1, 1, 1, _, _, _},
     {_, I, 2, 2, 2, 2, _, _},
     {_, _, _, 8, 8, 8, 8, _},
     {_, _, _, _, I, I, I, I},
     {_, _, _, _, _, _, _, _},
     {_, _, _, _, _, _, _, _},
     {_, _, _, _, _, _, _, _},
     {_, _, _, _, _, _, _, _}},
    {{8, 1, 1, 1, _, _, _, _},
     {_, I, 2, 2, 2, _, _, _},
     {_, _, _, 8, 3, 3, _, _},
     {_, _, _, _, I, 6, 6, _},
     {_, _, _, _, _, _, I, I},
     {_, _, _, _, _, _, _, _},
     {_, _, _, _, _, _, _, _},
     {_, _, _, _, _, _, _, _}},
    {{8, 1, 1, _, _, _, _, _},
     {_, I, 2, 2, _, _, _, _},
     {_, _, _, 8, 3, _, _, _},
     {_, _, _, _, I, 5, _, _},
     {_, _, _, _, _, _, 8, _},
     {_, _, _, _, _, _, _, I},
     {_, _, _, _, _, _, _, _},
     {_, _, _, _, _, _, _, _}},
};

void golden_shortest_prefix(Outcome& o) {
  const Text t1("abcabbac"), t2("bcbcbbca");
  SolveStats base, diag;
  std::vector<DiagonalTable> trace;
  o.require(slcs_baseline(t1, t2, Budget(3), &base) == 5, "baseline != 5");
  o.require(slcs_diagonal(t1, t2, Budget(3), &diag, &trace) == 5, "diagonal != 5");
  const std::vector<std::size_t> per_h{3, 4, 5};
  o.require(base.per_budget == per_h, "baseline per-h " + join(base.per_budget));
  o.require(diag.per_budget == per_h, "diagonal per-h " + join(diag.per_budget));
  o.require(trace.size() == 3, "expected three tables");
  if (trace.size() != 3) return;

  std::size_t mismatches = 0, cells = 0, expected_cells = 0;
  for (std::size_t h = 1; h <= 3; ++h) {
    // Every computed cell is a non-blank entry with the same value.
    std::vector<std::vector<bool>> seen(9, std::vector<bool>(9, false));
    const auto& table = trace[h - 1];
    for (std::size_t d = 0; d < table.diagonal_count(); ++d) {
      const auto& cellsd = table.diagonal(d);
      for (std::size_t s = 1; s <= cellsd.size(); ++s) {
        const std::size_t i = d + s;
        ++cells;
        seen[s][i] = true;
        mismatches += i > 8 || kSparse[h - 1][s - 1][i - 1] != cellsd[s - 1];
      }
    }
    // Every non-blank entry was computed.
    for (std::size_t s = 1; s <= 8; ++s)
      for (std::size_t i = 1; i <= 8; ++i) {
        expected_cells += kSparse[h - 1][s - 1][i - 1] != _;
        mismatches += kSparse[h - 1][s - 1][i - 1] != _ && !seen[s][i];
      }
  }
  o.require(cells == expected_cells,
            "computed " + std::to_string(cells) + " cells, expected " + std::to_string(expected_cells));
  o.require(mismatches == 0, std::to_string(mismatches) + " sparse cell mismatches");
}

void golden_reduction(Outcome& o) {
  const auto r = build_episode_reduction("0101", "00", 3);
  o.require(r.text.str() == "$0$0$0$0$0$0$$0$$1$$0$$1$$0$0$0$0$0$0$", "T' = " + r.text.str());
  o.require(r.pattern.str() == "$$$$$$$$00$$$$$$$$", "P' = " + r.pattern.str());
  o.require(r.segments == 13, "f = " + std::to_string(r.segments));
  o.require(sege(r.text, r.pattern, Budget(13)), "sege(T', P', 13) false");
  o.require(!sege(r.text, r.pattern, Budget(12)), "sege(T', P', 12) true");
  const auto fast = min_segments(r.text, r.pattern);
  const auto brute = oracle::min_segments_bruteforce(r.text, r.pattern, oracle::Limits{40});
  o.require(fast == 13u, "minsege != 13");
  o.require(brute == 13u, "brute-force minsege != 13");
}

void two_text_examples(Outcome& o) {
  o.require(slcs("abcxdexf", "abycdef", Budget(2)) == 4, "slcs(abcxdexf, abycdef, 2) != 4");
  o.require(indseglcs("abcxdexf", "abycdef", Budget(2), Budget(2)) == 5, "indseglcs(.., 2, 2) != 5");
  o.require(indseglcs("abcxdexf", "abycdef", Budget(3), Budget(2)) == 6, "indseglcs(.., 3, 2) != 6");
  o.require(indseglcs("abac", "acbc", Budget(2), Budget(2)) == 3, "indseglcs(abac, acbc, 2, 2) != 3");
}

std::string binary(std::size_t value, std::size_t length) {
  std::string s(length, '0');
  for (std::size_t k = 0; k < length; ++k)
    if (value >> k & 1) s[k] = '1';
  return s;
}

void oracle_equivalence(Outcome& o) {
  const auto start = Clock::now();
  harness::DiffConfig config;
  config.count = kOracleCases;
  config.max_length = kOracleMaxLength;
  config.max_alphabet = kOracleMaxAlphabet;
  config.seed = 20240601;
  const auto report = harness::differential_run(config);
  o.require(report.cases >= kOracleCases, "too few cases");
  if (!report.ok()) {
    std::ostringstream out;
    harness::write_report(out, report);
    o.require(false, std::to_string(report.mismatches.size()) + " differential mismatches");
    std::cerr << out.str();
  }

  std::size_t sweep = 0, broken = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t m = 1; m <= 4; ++m)
      for (std::size_t tv = 0; tv < (1u << n); ++tv)
        for (std::size_t pv = 0; pv < (1u << m); ++pv)
          for (std::size_t h = 1; h <= n; ++h) {
            ++sweep;
            broken += !check_reduction_equivalence(binary(tv, n), binary(pv, m), h);
          }
  o.require(broken == 0, std::to_string(broken) + " reduction counterexamples");
  o.detail << (o.pass ? "" : "; ") << report.cases << " cases, " << report.comparisons << " comparisons, "
           << sweep << " reduction instances";
  o.require(seconds_since(start) < kOracleSeconds, "over time limit");
}

void degenerate_budgets(Outcome& o) {
  std::mt19937_64 rng(424242);
  std::size_t bad_substring = 0, bad_slcs = 0, bad_ind = 0;
  for (std::size_t c = 0; c < kDegenerateCases; ++c) {
    const std::size_t sigma = uniform(rng, 1, 4);
    const Text t1 = random_text(rng, uniform(rng, 0, kDegenerateMaxLength), sigma);
    const Text t2 = random_text(rng, uniform(rng, 0, kDegenerateMaxLength), sigma);
    const std::size_t lcs = classic_lcs(t1.view(), t2.view());
    const std::size_t factor = longest_common_substring(t1.view(), t2.view());
    for (const SlcsAlgo algo : {SlcsAlgo::Diagonal, SlcsAlgo::Baseline}) {
      bad_substring += slcs(t1, t2, Budget(1), algo) != factor;
      // Any budget beyond the shorter length is clamped to it.
      bad_slcs += slcs(t1, t2, Budget(static_cast<long long>(t1.size() + t2.size() + 1)), algo) != lcs;
    }
    const Budget big1(static_cast<long long>(t1.size() + 1)), big2(static_cast<long long>(t2.size() + 1));
    bad_ind += indseglcs(t1, t2, big1, big2) != lcs;
  }
  o.require(bad_substring == 0, std::to_string(bad_substring) + " f=1 mismatches");
  o.require(bad_slcs == 0, std::to_string(bad_slcs) + " slcs/LCS mismatches");
  o.require(bad_ind == 0, std::to_string(bad_ind) + " indseglcs/LCS mismatches");
}

std::uint32_t direct_lcsuf(const Text& a, const Text& b, std::size_t i, std::size_t j) {
  std::uint32_t x = 0;
  while (x < i && x < j && a[i - 1 - x] == b[j - 1 - x]) ++x;
  return x;
}

void invariants(Outcome& o) {
  std::mt19937_64 rng(777);

  // Ordering inequalities on every computed diagonal cell.
  std::size_t ineq_bad = 0, ineq_cells = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t sigma = uniform(rng, 1, 4);
    Text t1 = random_text(rng, uniform(rng, 1, 60), sigma);
    Text t2 = random_text(rng, uniform(rng, 1, 60), sigma);
    if (t1.size() > t2.size()) std::swap(t1, t2);
    std::vector<DiagonalTable> trace;
    slcs_diagonal(t1, t2, Budget(static_cast<long long>(uniform(rng, 1, 8))), nullptr, &trace);
    for (const auto& table : trace)
      for (std::size_t d = 0; d < table.diagonal_count(); ++d) {
        const auto& cells = table.diagonal(d);
        for (std::size_t s = 1; s <= cells.size(); ++s) {
          const std::size_t i = d + s;
          const std::uint32_t v = cells[s - 1];
          ++ineq_cells;
          if (v == I) continue;
          ineq_bad += !(v <= table.at(i - 1, s));
          ineq_bad += !(v > table.at(i - 1, s - 1));
        }
      }
  }
  o.require(ineq_bad == 0, std::to_string(ineq_bad) + " ordering violations");

  // Shortest-prefix recurrence on exhaustively computed tables.
  std::size_t rec_bad = 0, rec_cells = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t sigma = uniform(rng, 1, 3);
    const Text t1 = random_text(rng, uniform(rng, 1, kRecurrenceMaxLength), sigma);
    const Text t2 = random_text(rng, uniform(rng, t1.size(), kRecurrenceMaxLength), sigma);
    const std::size_t f = uniform(rng, 1, 4);
    const auto L = dense_shortest_prefix_tables(t1, t2, Budget(static_cast<long long>(f)));
    auto lower = [&](std::size_t h, std::size_t i, std::size_t s) -> std::uint32_t {
      if (s == 0) return 0;
      return h == 0 ? I : L[h - 1][i][s - 1];
    };
    for (std::size_t h = 1; h <= f; ++h)
      for (std::size_t i = 1; i <= t1.size(); ++i)
        for (std::size_t s = 1; s <= t1.size(); ++s) {
          std::uint32_t jmin = I;
          for (std::size_t j = 1; j <= t2.size() && jmin == I; ++j) {
            const std::size_t x = std::min<std::size_t>(direct_lcsuf(t1, t2, i, j), s);
            if (x == 0) continue;
            const std::uint32_t rest = lower(h - 1, i - x, s - x);
            if (rest != I && j >= rest + x) jmin = static_cast<std::uint32_t>(j);
          }
          ++rec_cells;
          rec_bad += L[h - 1][i][s - 1] != std::min(L[h - 1][i - 1][s - 1], jmin);
        }
  }
  o.require(rec_bad == 0, std::to_string(rec_bad) + " recurrence violations");

  // llpf monotone and rebuilt from its breakpoints.
  std::size_t llpf_bad = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t sigma = uniform(rng, 1, 3);
    const Text t = random_text(rng, uniform(rng, 0, 200), sigma);
    const Text p = random_text(rng, uniform(rng, 0, 10), sigma);
    const auto llpf = compute_llpf(t, p);
    for (std::size_t k = 1; k < llpf.size(); ++k) llpf_bad += llpf[k] < llpf[k - 1];
    llpf_bad += expand_llpf(compute_llpf_breakpoints(t, p), t.size()) != llpf;
  }
  o.require(llpf_bad == 0, std::to_string(llpf_bad) + " llpf violations");

  // lcsuf modes on full grids.
  std::size_t lce_bad = 0, lce_cells = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t sigma = uniform(rng, 1, 4);
    const std::size_t n1 = trial < 4 ? kLceGridMaxLength : uniform(rng, 0, kLceGridMaxLength);
    const std::size_t n2 = trial < 4 ? kLceGridMaxLength : uniform(rng, 0, kLceGridMaxLength);
    const Text a = random_text(rng, n1, sigma), b = random_text(rng, n2, sigma);
    const LcsufIndex table(a, b, LceMode::QuadraticTable), sa(a, b, LceMode::SuffixArray);
    for (std::size_t i = 0; i <= a.size(); ++i)
      for (std::size_t j = 0; j <= b.size(); ++j) {
        ++lce_cells;
        lce_bad += table.query(i, j) != sa.query(i, j);
      }
  }
  o.require(lce_bad == 0, std::to_string(lce_bad) + " lcsuf disagreements");
  o.detail << (o.pass ? "" : "; ") << ineq_cells << " diagonal cells, " << rec_cells << " recurrence cells, "
           << lce_cells << " lcsuf cells";
}

void complexity_trend(Outcome& o) {
  const auto start = Clock::now();
  harness::BenchConfig config;
  config.families = {harness::BenchFamily::Similarity};
  config.sizes = kTrendSizes;
  config.budget = kTrendBudget;
  config.repetitions = 1;
  const auto rows = harness::benchmark(config);

  std::vector<double> diag, base;
  for (const auto& r : rows) {
    o.require(r.n1 - r.ell <= kTrendMaxGap, "n1 - ell = " + std::to_string(r.n1 - r.ell) + " at n = " +
                                                std::to_string(r.n1));
    (r.algorithm == "diagonal" ? diag : base).push_back(static_cast<double>(r.cell_visits));
  }
  o.require(diag.size() == kTrendSizes.size() && base.size() == kTrendSizes.size(), "missing rows");
  if (!o.pass) return;

  const double growth = static_cast<double>(kTrendSizes.back()) / static_cast<double>(kTrendSizes.front());
  const double diag_ratio = diag.back() / diag.front();
  const double base_ratio = base.back() / base.front();
  const double linear = growth, quadratic = growth * growth;

  std::ostringstream detail;
  detail.precision(3);
  detail << "diagonal x" << diag_ratio << " (linear x" << linear << "), baseline x" << base_ratio << " (quadratic x"
         << quadratic << "); diagonal per doubling";
  for (std::size_t k = 1; k < diag.size(); ++k) detail << ' ' << diag[k] / diag[k - 1];
  detail << "; diagonal visits " << join(std::vector<std::uint64_t>(diag.begin(), diag.end()));

  o.require(diag_ratio <= linear * kTrendTolerance && diag_ratio >= linear / kTrendTolerance,
            "diagonal growth not within " + std::to_string(kTrendTolerance).substr(0, 3) + "x of linear");
  o.require(base_ratio <= quadratic * kTrendTolerance && base_ratio >= quadratic / kTrendTolerance,
            "baseline growth not within tolerance of quadratic");
  o.require(seconds_since(start) < kTrendSeconds, "over time limit");
  o.detail << (o.pass ? "" : "; ") << detail.str();
}

}  // namespace

int main() {
  report(1, "golden lpf/lsf/llpf table", golden_border_arrays);
  report(2, "golden shortest-prefix tables", golden_shortest_prefix);
  report(3, "golden episode reduction", golden_reduction);
  report(4, "two-text examples", two_text_examples);
  report(5, "oracle equivalence", oracle_equivalence);
  report(6, "degenerate-budget identities", degenerate_budgets);
  report(7, "invariant suite", invariants);
  report(8, "complexity trend", complexity_trend);
  std::printf("%s: %d of 8 criteria failed\n", failures == 0 ? "PASS" : "FAIL", failures);
  return failures == 0 ? 0 : 1;
}
