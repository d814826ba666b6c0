#include "segsub/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "segsub/harness.hpp"
#include "segsub/indseglcs.hpp"
#include "segsub/oracle.hpp"
#include "segsub/reduction.hpp"
#include "segsub/segmatch.hpp"
#include "segsub/seglcs.hpp"

namespace segsub::cli {
namespace {

using json = nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Inline value, or the raw bytes of a file when written as @path (one
// trailing newline stripped).
Text resolve_text(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return Text(arg);
  std::ifstream in(arg.substr(1), std::ios::binary);
  if (!in) throw UsageError("cannot read " + arg.substr(1));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string bytes = buffer.str();
  if (!bytes.empty() && bytes.back() == '\n') bytes.pop_back();
  return Text(std::move(bytes));
}

Budget budget_from(long long f, const char* flag) {
  if (f < 1) throw UsageError(std::string(flag) + " must be a positive integer");
  return Budget(f);
}

json embedding_json(const Embedding& e) { return e.starts; }

struct Options {
  bool json_output = false;

  std::string text, pattern, t1, t2;
  long long segments = 0, f1 = 0, f2 = 0;
  std::size_t bound = 0;
  std::string algo;
  std::string family = "auto";
  bool witness = false;
  bool dump = false;
  bool verify = false;
  bool as_instance = false;

  std::string kind = "seglcs";
  std::size_t n1 = 8, n2 = 8, alphabet = 2;
  std::uint64_t seed = 1;
  std::size_t similarity = 0;
  bool has_similarity = false;
  std::size_t count = 1000;
  std::size_t max_length = 10;
  bool inject_fault = false;
  std::string csv;
  std::vector<std::size_t> sizes{1000, 2000, 4000, 8000};
  std::vector<std::string> families{"similarity"};
  std::size_t edits = 2;
  std::size_t reps = 3;
  bool no_baseline = false;
};

int run_sege(const Options& o, std::ostream& out) {
  const SegeAlgo algo = o.algo == "dp" ? SegeAlgo::Dp : o.algo == "kmp2" ? SegeAlgo::Kmp2 : SegeAlgo::Auto;
  const Budget f = budget_from(o.segments, "--segments");
  if (algo == SegeAlgo::Kmp2 && f.value() > 2) throw UsageError("--algo kmp2 needs --segments 1 or 2");
  const bool answer = sege(resolve_text(o.text), resolve_text(o.pattern), f, algo);
  if (o.json_output)
    out << json{{"answer", answer}}.dump() << '\n';
  else
    out << (answer ? "yes" : "no") << '\n';
  return answer ? kExitYes : kExitNo;
}

int run_minsege(const Options& o, std::ostream& out) {
  const Text t = resolve_text(o.text), p = resolve_text(o.pattern);
  const auto answer = min_segments(t, p);
  std::ostringstream tables;
  if (o.dump) dump_tables(tables, min_segments_tables(t, p));
  if (o.json_output) {
    json j{{"answer", answer ? json(*answer) : json(nullptr)}};
    if (o.dump) j["tables"] = tables.str();
    out << j.dump() << '\n';
  } else {
    if (answer)
      out << *answer << '\n';
    else
      out << "nil\n";
    out << tables.str();
  }
  return kExitYes;
}

int run_seglcs(const Options& o, std::ostream& out) {
  const Text t1 = resolve_text(o.t1), t2 = resolve_text(o.t2);
  const Budget f = budget_from(o.segments, "--segments");
  const std::string algo = o.witness && o.algo.empty() ? "baseline" : o.algo.empty() ? "diagonal" : o.algo;
  if (o.dump && algo != "diagonal") throw UsageError("--dump-tables needs --algo diagonal");
  if (o.witness && algo != "baseline") throw UsageError("--witness is produced by the baseline algorithm");

  std::size_t length = 0;
  std::vector<DiagonalTable> trace;
  if (algo == "oracle") {
    length = oracle::slcs_bruteforce(t1, t2, f);
  } else if (algo == "baseline") {
    length = slcs(t1, t2, f, SlcsAlgo::Baseline);
  } else if (o.dump) {
    const bool swap = t1.size() > t2.size();
    const Budget clamped(static_cast<long long>(std::min(f.value(), std::max<std::size_t>(1, std::min(t1.size(), t2.size())))));
    length = slcs_diagonal(swap ? t2 : t1, swap ? t1 : t2, clamped, nullptr, &trace);
  } else {
    length = slcs(t1, t2, f, SlcsAlgo::Diagonal);
  }

  std::optional<SlcsWitness> witness;
  if (o.witness) witness = slcs_witness(t1, t2, f);

  if (o.json_output) {
    json j{{"length", length}};
    if (witness)
      j["witness"] = {{"segments", witness->segmentation.segments},
                      {"t1_starts", embedding_json(witness->in_first)},
                      {"t2_starts", embedding_json(witness->in_second)}};
    if (o.dump) {
      json cells = json::array();
      for (std::size_t h = 1; h <= trace.size(); ++h)
        for (std::size_t d = 0; d < trace[h - 1].diagonal_count(); ++d) {
          const auto& diag = trace[h - 1].diagonal(d);
          for (std::size_t s = 1; s <= diag.size(); ++s)
            cells.push_back({h, d, s, diag[s - 1] == DiagonalTable::kInfinity ? json(nullptr) : json(diag[s - 1])});
        }
      j["tables"] = cells;
    }
    out << j.dump() << '\n';
    return kExitYes;
  }

  out << length << '\n';
  if (witness) {
    const auto& segs = witness->segmentation.segments;
    for (std::size_t k = 0; k < segs.size(); ++k)
      out << "segment " << k + 1 << ' ' << witness->in_first.starts[k] << ' ' << witness->in_second.starts[k] << ' '
          << segs[k] << '\n';
  }
  if (o.dump) dump_diagonal_tables(out, trace);
  return kExitYes;
}

int run_indseglcs(const Options& o, std::ostream& out) {
  IndSegOptions options;
  const FamilyChoice choice = o.family == "count" ? FamilyChoice::Count
                              : o.family == "score" ? FamilyChoice::Score
                                                    : FamilyChoice::Auto;
  options.first = options.second = choice;
  const std::size_t length = indseglcs(resolve_text(o.t1), resolve_text(o.t2), budget_from(o.f1, "--f1"),
                                       budget_from(o.f2, "--f2"), options);
  if (o.json_output)
    out << json{{"length", length}}.dump() << '\n';
  else
    out << length << '\n';
  return kExitYes;
}

int run_reduce(const Options& o, std::ostream& out) {
  const Text t = resolve_text(o.text), p = resolve_text(o.pattern);
  const auto reduced = build_episode_reduction(t, p, o.bound);
  std::optional<bool> equivalent;
  if (o.verify) equivalent = check_reduction_equivalence(t, p, o.bound);

  if (o.json_output) {
    json j{{"answer", {{"text", reduced.text.str()}, {"pattern", reduced.pattern.str()}, {"segments", reduced.segments}}}};
    if (equivalent) j["verified"] = *equivalent;
    out << j.dump() << '\n';
  } else if (o.as_instance) {
    harness::write_instance(out, {harness::InstanceKind::Sege, reduced.text, reduced.pattern, reduced.segments,
                                  reduced.segments});
  } else {
    out << reduced.text.view() << '\n' << reduced.pattern.view() << '\n' << reduced.segments << '\n';
  }
  if (equivalent && !o.json_output) out << "equivalent " << (*equivalent ? "yes" : "no") << '\n';
  return equivalent.value_or(true) ? kExitYes : kExitNo;
}

int run_gen(const Options& o, std::ostream& out) {
  harness::InstanceSpec spec;
  spec.kind = harness::parse_instance_kind(o.kind);
  spec.n1 = o.n1;
  spec.n2 = o.n2;
  spec.alphabet = o.alphabet;
  spec.seed = o.seed;
  if (o.has_similarity) spec.similarity = o.similarity;
  if (o.f1 > 0) spec.f1 = static_cast<std::size_t>(o.f1);
  if (o.f2 > 0) spec.f2 = static_cast<std::size_t>(o.f2);
  const auto instance = harness::generate_instance(spec);
  if (o.json_output)
    out << json{{"answer",
                 {{"kind", harness::to_string(instance.kind)},
                  {"t1", instance.t1.str()},
                  {"t2", instance.t2.str()},
                  {"f1", instance.f1},
                  {"f2", instance.f2}}}}
               .dump()
        << '\n';
  else
    harness::write_instance(out, instance);
  return kExitYes;
}

int run_difftest(const Options& o, std::ostream& out) {
  harness::DiffConfig config;
  config.count = o.count;
  config.seed = o.seed;
  config.max_length = o.max_length;
  config.max_alphabet = o.alphabet;
  config.inject_fault = o.inject_fault;
  const auto report = harness::differential_run(config);
  if (o.json_output) {
    json mismatches = json::array();
    for (const auto& m : report.mismatches)
      mismatches.push_back({{"check", m.check},
                            {"t1", m.instance.t1.str()},
                            {"t2", m.instance.t2.str()},
                            {"f1", m.instance.f1},
                            {"f2", m.instance.f2},
                            {"expected", m.expected},
                            {"actual", m.actual}});
    out << json{{"answer", report.ok()},
                {"cases", report.cases},
                {"comparisons", report.comparisons},
                {"mismatches", mismatches}}
               .dump()
        << '\n';
  } else {
    harness::write_report(out, report);
  }
  return report.ok() ? kExitYes : kExitNo;
}

int run_bench(const Options& o, std::ostream& out) {
  harness::BenchConfig config;
  config.sizes = o.sizes;
  config.families.clear();
  for (const auto& name : o.families) config.families.push_back(harness::parse_bench_family(name));
  config.budget = budget_from(o.segments > 0 ? o.segments : 4, "--segments").value();
  config.edits = o.edits;
  config.repetitions = o.reps;
  config.seed = o.seed;
  config.run_baseline = !o.no_baseline;
  if (o.alphabet > 0) config.alphabet = o.alphabet;
  const auto rows = harness::benchmark(config);
  if (o.csv.empty() || o.csv == "-") {
    harness::write_csv(out, rows);
  } else {
    std::ofstream file(o.csv);
    if (!file) throw UsageError("cannot write " + o.csv);
    harness::write_csv(file, rows);
    out << "wrote " << rows.size() << " rows to " << o.csv << '\n';
  }
  return kExitYes;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Segment-constrained subsequence matching and segmental LCS", "segsub"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json_output, "Print a single JSON object");

  auto* sege_cmd = app.add_subcommand("sege", "Decide whether the pattern is an f-segmental subsequence");
  sege_cmd->add_option("--text", o.text, "Text (or @file)")->required();
  sege_cmd->add_option("--pattern", o.pattern, "Pattern (or @file)")->required();
  sege_cmd->add_option("--segments", o.segments, "Segment budget f")->required();
  sege_cmd->add_option("--algo", o.algo, "auto | dp | kmp2")->check(CLI::IsMember({"auto", "dp", "kmp2"}));

  auto* minsege_cmd = app.add_subcommand("minsege", "Minimum number of segments, or nil");
  minsege_cmd->add_option("--text", o.text)->required();
  minsege_cmd->add_option("--pattern", o.pattern)->required();
  minsege_cmd->add_flag("--dump-tables", o.dump, "Print the D and E tables");

  auto* seglcs_cmd = app.add_subcommand("seglcs", "Segmental LCS length");
  seglcs_cmd->add_option("--t1", o.t1)->required();
  seglcs_cmd->add_option("--t2", o.t2)->required();
  seglcs_cmd->add_option("--segments", o.segments)->required();
  seglcs_cmd->add_option("--algo", o.algo, "diagonal | baseline | oracle")
      ->check(CLI::IsMember({"diagonal", "baseline", "oracle"}));
  seglcs_cmd->add_flag("--witness", o.witness, "Print segments and their start positions in both texts");
  seglcs_cmd->add_flag("--dump-tables", o.dump, "Print the sparse diagonal tables as `h diag s value`");

  auto* ind_cmd = app.add_subcommand("indseglcs", "LCS under independent segment budgets");
  ind_cmd->add_option("--t1", o.t1)->required();
  ind_cmd->add_option("--t2", o.t2)->required();
  ind_cmd->add_option("--f1", o.f1)->required();
  ind_cmd->add_option("--f2", o.f2)->required();
  ind_cmd->add_option("--force-family", o.family, "count | score | auto")
      ->check(CLI::IsMember({"count", "score", "auto"}));

  auto* reduce_cmd = app.add_subcommand("reduce-episode", "Build the SegE instance for a binary episode query");
  reduce_cmd->add_option("--text", o.text)->required();
  reduce_cmd->add_option("--pattern", o.pattern)->required();
  reduce_cmd->add_option("--bound", o.bound)->required();
  reduce_cmd->add_flag("--verify", o.verify, "Check against brute-force episode matching");
  reduce_cmd->add_flag("--instance", o.as_instance, "Print in instance file format");

  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--kind", o.kind)->check(CLI::IsMember({"sege", "seglcs", "indseglcs"}));
  gen_cmd->add_option("--n1", o.n1);
  gen_cmd->add_option("--n2", o.n2);
  gen_cmd->add_option("--alphabet", o.alphabet);
  gen_cmd->add_option("--seed", o.seed);
  gen_cmd->add_option("--similarity", o.similarity, "t2 = t1 with this many substitutions");
  gen_cmd->add_option("--f1", o.f1);
  gen_cmd->add_option("--f2", o.f2);

  auto* diff_cmd = app.add_subcommand("difftest", "Differential test against brute-force oracles");
  diff_cmd->add_option("--count", o.count);
  diff_cmd->add_option("--seed", o.seed);
  diff_cmd->add_option("--max-len", o.max_length);
  diff_cmd->add_option("--alphabet", o.alphabet, "Largest alphabet size");
  diff_cmd->add_flag("--inject-fault", o.inject_fault, "Run with a deliberate off-by-one (mutation check)");

  auto* bench_cmd = app.add_subcommand("bench", "Benchmark the SegLCS solvers");
  bench_cmd->add_option("--seed", o.seed);
  bench_cmd->add_option("--csv", o.csv, "Output path (default stdout)");
  bench_cmd->add_option("--sizes", o.sizes)->delimiter(',');
  bench_cmd->add_option("--families", o.families)->delimiter(',');
  bench_cmd->add_option("--segments", o.segments);
  bench_cmd->add_option("--edits", o.edits);
  bench_cmd->add_option("--alphabet", o.alphabet);
  bench_cmd->add_option("--reps", o.reps);
  bench_cmd->add_flag("--no-baseline", o.no_baseline);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }
  o.has_similarity = gen_cmd->count("--similarity") > 0;
  if (diff_cmd->parsed() && diff_cmd->count("--alphabet") == 0) o.alphabet = 3;
  if (bench_cmd->parsed() && bench_cmd->count("--alphabet") == 0) o.alphabet = 0;

  try {
    if (sege_cmd->parsed()) return run_sege(o, out);
    if (minsege_cmd->parsed()) return run_minsege(o, out);
    if (seglcs_cmd->parsed()) return run_seglcs(o, out);
    if (ind_cmd->parsed()) return run_indseglcs(o, out);
    if (reduce_cmd->parsed()) return run_reduce(o, out);
    if (gen_cmd->parsed()) return run_gen(o, out);
    if (diff_cmd->parsed()) return run_difftest(o, out);
    if (bench_cmd->parsed()) return run_bench(o, out);
  } catch (const oracle::SizeLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitSizeLimit;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace segsub::cli
