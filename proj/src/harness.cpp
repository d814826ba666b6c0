#include "segsub/harness.hpp"

#include <algorithm>
#include <chrono>
#include <istream>
#include <ostream>
#include <random>
#include <stdexcept>
#include <tuple>

#include "segsub/indseglcs.hpp"
#include "segsub/segmatch.hpp"
#include "segsub/seglcs.hpp"

namespace segsub::harness {
namespace {

// Uniform in [0, bound). Modulo keeps output identical across standard
// libraries; the bias is irrelevant at these ranges.
std::size_t draw(std::mt19937_64& rng, std::size_t bound) { return bound == 0 ? 0 : rng() % bound; }

char symbol_for(std::size_t k, std::size_t alphabet) {
  return alphabet <= 26 ? static_cast<char>('a' + k) : static_cast<char>(static_cast<unsigned char>(k));
}

std::string random_string(std::mt19937_64& rng, std::size_t length, std::size_t alphabet) {
  std::string s(length, '\0');
  for (auto& c : s) c = symbol_for(draw(rng, alphabet), alphabet);
  return s;
}

std::string with_substitutions(std::mt19937_64& rng, std::string s, std::size_t edits, std::size_t alphabet) {
  if (s.empty() || alphabet < 2) return s;
  for (std::size_t e = 0; e < edits; ++e) {
    const std::size_t pos = draw(rng, s.size());
    const std::size_t shift = 1 + draw(rng, alphabet - 1);
    const std::size_t old = alphabet <= 26 ? static_cast<std::size_t>(s[pos] - 'a') : static_cast<unsigned char>(s[pos]);
    s[pos] = symbol_for((old + shift) % alphabet, alphabet);
  }
  return s;
}

std::size_t budget_cap(std::size_t n) { return (n + 1) / 2 + 1; }

template <typename Duration>
std::uint64_t to_ns(Duration d) {
  return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(d).count());
}

}  // namespace

std::string to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::Sege:
      return "sege";
    case InstanceKind::Seglcs:
      return "seglcs";
    case InstanceKind::Indseglcs:
      return "indseglcs";
  }
  return "?";
}

InstanceKind parse_instance_kind(std::string_view name) {
  if (name == "sege") return InstanceKind::Sege;
  if (name == "seglcs") return InstanceKind::Seglcs;
  if (name == "indseglcs") return InstanceKind::Indseglcs;
  throw std::invalid_argument("unknown instance kind '" + std::string(name) + "'");
}

std::string to_string(BenchFamily family) {
  switch (family) {
    case BenchFamily::Similarity:
      return "similarity";
    case BenchFamily::Random:
      return "random";
    case BenchFamily::Identical:
      return "identical";
  }
  return "?";
}

BenchFamily parse_bench_family(std::string_view name) {
  if (name == "similarity") return BenchFamily::Similarity;
  if (name == "random") return BenchFamily::Random;
  if (name == "identical") return BenchFamily::Identical;
  throw std::invalid_argument("unknown benchmark family '" + std::string(name) + "'");
}

Instance generate_instance(const InstanceSpec& spec) {
  if (spec.alphabet < 1 || spec.alphabet > 256)
    throw std::invalid_argument("alphabet size must be in 1..256, got " + std::to_string(spec.alphabet));
  if ((spec.f1 && *spec.f1 == 0) || (spec.f2 && *spec.f2 == 0))
    throw std::invalid_argument("segment budgets must be positive");

  std::mt19937_64 rng(spec.seed);
  Instance instance;
  instance.kind = spec.kind;
  std::string t1 = random_string(rng, spec.n1, spec.alphabet);
  std::string t2 = spec.similarity ? with_substitutions(rng, t1, *spec.similarity, spec.alphabet)
                                   : random_string(rng, spec.n2, spec.alphabet);
  instance.f1 = spec.f1 ? *spec.f1 : 1 + draw(rng, budget_cap(t1.size()));
  instance.f2 = spec.f2 ? *spec.f2 : (spec.kind == InstanceKind::Indseglcs ? 1 + draw(rng, budget_cap(t2.size())) : instance.f1);
  instance.t1 = Text(std::move(t1));
  instance.t2 = Text(std::move(t2));
  return instance;
}

void write_instance(std::ostream& out, const Instance& instance) {
  out << "segsub-instance 1\n"
      << "kind " << to_string(instance.kind) << '\n'
      << "t1 " << instance.t1.view() << '\n'
      << "t2 " << instance.t2.view() << '\n'
      << "f1 " << instance.f1 << '\n'
      << "f2 " << instance.f2 << '\n';
}

Instance read_instance(std::istream& in) {
  auto field = [&](std::string_view key) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("instance truncated before '" + std::string(key) + "'");
    if (line.compare(0, key.size(), key) != 0 || line.size() < key.size() + 1 || line[key.size()] != ' ')
      throw std::invalid_argument("expected instance field '" + std::string(key) + "', got '" + line + "'");
    return line.substr(key.size() + 1);
  };
  if (field("segsub-instance") != "1") throw std::invalid_argument("unsupported instance format version");
  Instance instance;
  instance.kind = parse_instance_kind(field("kind"));
  instance.t1 = Text(field("t1"));
  instance.t2 = Text(field("t2"));
  instance.f1 = std::stoul(field("f1"));
  instance.f2 = std::stoul(field("f2"));
  return instance;
}

DiffReport differential_run(const DiffConfig& config) {
  DiffReport report;
  std::mt19937_64 rng(config.seed);
  IndSegOptions ind_options;
  if (config.inject_fault) ind_options.clamp_bias = -1;

  for (std::size_t c = 0; c < config.count; ++c) {
    const std::size_t alphabet = 1 + draw(rng, config.max_alphabet);
    const Text t1 = random_string(rng, draw(rng, config.max_length + 1), alphabet);
    const Text t2 = random_string(rng, draw(rng, config.max_length + 1), alphabet);
    ++report.cases;

    auto compare = [&](std::string check, InstanceKind kind, std::size_t f1, std::size_t f2, long long expected,
                       long long actual) {
      ++report.comparisons;
      if (expected != actual) report.mismatches.push_back({std::move(check), {kind, t1, t2, f1, f2}, expected, actual});
    };

    // t1 as text, t2 as pattern.
    const auto needed = oracle::min_segments_bruteforce(t1, t2, config.limits);
    const long long needed_or_nil = needed ? static_cast<long long>(*needed) : 0;
    const auto fast = min_segments(t1, t2);
    compare("min_segments", InstanceKind::Sege, 0, 0, needed_or_nil, fast ? static_cast<long long>(*fast) : 0);

    const std::size_t max_f = std::max(t1.size(), t2.size()) + 1;
    for (std::size_t f = 1; f <= max_f; ++f) {
      const Budget budget(static_cast<long long>(f));
      const long long truth = needed && *needed <= f;
      compare("sege_dp", InstanceKind::Sege, f, f, truth, sege(t1, t2, budget, SegeAlgo::Dp));
      compare("sege_auto", InstanceKind::Sege, f, f, truth, sege(t1, t2, budget, SegeAlgo::Auto));
      if (f <= 2) compare("sege_kmp2", InstanceKind::Sege, f, f, truth, sege(t1, t2, budget, SegeAlgo::Kmp2));

      const auto slcs_truth = static_cast<long long>(oracle::slcs_bruteforce(t1, t2, budget, config.limits));
      compare("slcs_baseline", InstanceKind::Seglcs, f, f, slcs_truth,
              static_cast<long long>(slcs(t1, t2, budget, SlcsAlgo::Baseline)));
      compare("slcs_diagonal", InstanceKind::Seglcs, f, f, slcs_truth,
              static_cast<long long>(slcs(t1, t2, budget, SlcsAlgo::Diagonal)));
    }

    const auto ind_truth = oracle::indseglcs_bruteforce_all(t1, t2, config.limits);
    for (std::size_t f1 = 1; f1 <= budget_cap(t1.size()); ++f1)
      for (std::size_t f2 = 1; f2 <= budget_cap(t2.size()); ++f2)
        compare("indseglcs", InstanceKind::Indseglcs, f1, f2, static_cast<long long>(ind_truth[f1 - 1][f2 - 1]),
                static_cast<long long>(indseglcs(t1, t2, Budget(static_cast<long long>(f1)),
                                                 Budget(static_cast<long long>(f2)), ind_options)));
  }
  return report;
}

void write_report(std::ostream& out, const DiffReport& report) {
  out << "cases " << report.cases << "\ncomparisons " << report.comparisons << "\nmismatches "
      << report.mismatches.size() << '\n';
  for (const auto& m : report.mismatches)
    out << "MISMATCH " << m.check << " t1=\"" << m.instance.t1.view() << "\" t2=\"" << m.instance.t2.view()
        << "\" f1=" << m.instance.f1 << " f2=" << m.instance.f2 << " expected=" << m.expected
        << " actual=" << m.actual << '\n';
}

std::vector<BenchRow> benchmark(const BenchConfig& config) {
  using clock = std::chrono::steady_clock;
  std::vector<BenchRow> rows;
  const Budget f(static_cast<long long>(config.budget));

  for (const BenchFamily family : config.families) {
    for (const std::size_t n : config.sizes) {
      std::mt19937_64 rng(config.seed ^ (n * 0x9E3779B97F4A7C15ULL) ^ static_cast<std::uint64_t>(family));
      const std::size_t alphabet = family == BenchFamily::Random ? config.random_alphabet : config.alphabet;
      std::string a = random_string(rng, n, alphabet);
      std::string b;
      switch (family) {
        case BenchFamily::Similarity:
          b = with_substitutions(rng, a, config.edits, alphabet);
          break;
        case BenchFamily::Random:
          b = random_string(rng, n, alphabet);
          break;
        case BenchFamily::Identical:
          b = a;
          break;
      }
      const Text t1(std::move(a)), t2(std::move(b));

      auto measure = [&](const std::string& name, SlcsAlgo algo) {
        std::vector<std::uint64_t> times;
        BenchRow row{name, t1.size(), t2.size(), config.budget, 0, 0, 0, to_string(family), config.seed};
        for (std::size_t r = 0; r < std::max<std::size_t>(1, config.repetitions); ++r) {
          SolveStats stats;
          const auto start = clock::now();
          row.ell = slcs(t1, t2, f, algo, &stats);
          times.push_back(to_ns(clock::now() - start));
          row.cell_visits = stats.cell_visits;
        }
        std::sort(times.begin(), times.end());
        row.wall_ns = times[times.size() / 2];
        rows.push_back(row);
      };
      measure("diagonal", SlcsAlgo::Diagonal);
      if (config.run_baseline) measure("baseline", SlcsAlgo::Baseline);
    }
  }
  std::sort(rows.begin(), rows.end(), [](const BenchRow& x, const BenchRow& y) {
    return std::tie(x.family, x.algorithm, x.n1, x.n2) < std::tie(y.family, y.algorithm, y.n1, y.n2);
  });
  return rows;
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "algorithm,n1,n2,f,ell,wall_ns,cell_visits,family,seed\n";
  for (const auto& r : rows)
    out << r.algorithm << ',' << r.n1 << ',' << r.n2 << ',' << r.f << ',' << r.ell << ',' << r.wall_ns << ','
        << r.cell_visits << ',' << r.family << ',' << r.seed << '\n';
}

}  // namespace segsub::harness
