#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "segsub/core.hpp"
#include "segsub/oracle.hpp"

namespace segsub::harness {

enum class InstanceKind { Sege, Seglcs, Indseglcs };

std::string to_string(InstanceKind kind);
InstanceKind parse_instance_kind(std::string_view name);

struct InstanceSpec {
  InstanceKind kind = InstanceKind::Seglcs;
  std::size_t n1 = 8;
  std::size_t n2 = 8;
  std::size_t alphabet = 2;
  std::uint64_t seed = 0;
  /// When set, t2 is t1 with this many random substitutions and n2 is ignored.
  std::optional<std::size_t> similarity;
  std::optional<std::size_t> f1;
  std::optional<std::size_t> f2;
};

/// For Sege instances t1 is the text and t2 the pattern.
struct Instance {
  InstanceKind kind = InstanceKind::Seglcs;
  Text t1;
  Text t2;
  std::size_t f1 = 1;
  std::size_t f2 = 1;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Deterministic for a fixed spec. Symbols are 'a', 'b', ... for alphabets up
/// to 26 and raw bytes 0..k-1 beyond that. Throws std::invalid_argument for
/// an alphabet outside 1..256.
Instance generate_instance(const InstanceSpec& spec);

/// Instance file format, one field per line:
///   segsub-instance 1
///   kind <sege|seglcs|indseglcs>
///   t1 <raw bytes>
///   t2 <raw bytes>
///   f1 <int>
///   f2 <int>
void write_instance(std::ostream& out, const Instance& instance);
Instance read_instance(std::istream& in);

struct DiffConfig {
  std::size_t count = 1000;
  std::size_t max_length = 10;
  std::size_t max_alphabet = 3;
  std::uint64_t seed = 1;
  /// Runs the IndSegLCS solver with an off-by-one budget clamp.
  bool inject_fault = false;
  oracle::Limits limits{};
};

struct Mismatch {
  std::string check;
  Instance instance;
  long long expected = 0;
  long long actual = 0;
};

struct DiffReport {
  std::size_t cases = 0;
  std::size_t comparisons = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const noexcept { return mismatches.empty(); }
};

/// Runs every solver against the brute-force oracles on `count` random
/// instances, for every budget up to one past the clamping point.
DiffReport differential_run(const DiffConfig& config);

void write_report(std::ostream& out, const DiffReport& report);

enum class BenchFamily { Similarity, Random, Identical };

std::string to_string(BenchFamily family);
BenchFamily parse_bench_family(std::string_view name);

struct BenchConfig {
  std::vector<BenchFamily> families{BenchFamily::Similarity};
  std::vector<std::size_t> sizes{1000, 2000, 4000, 8000};
  std::size_t budget = 4;
  std::size_t edits = 2;
  std::size_t alphabet = 4;
  std::size_t random_alphabet = 26;
  std::size_t repetitions = 3;
  std::uint64_t seed = 1;
  bool run_baseline = true;
};

/// One CSV row. Columns, in order:
///   algorithm,n1,n2,f,ell,wall_ns,cell_visits,family,seed
struct BenchRow {
  std::string algorithm;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t f = 0;
  std::size_t ell = 0;
  std::uint64_t wall_ns = 0;  // median over repetitions
  std::uint64_t cell_visits = 0;
  std::string family;
  std::uint64_t seed = 0;
};

std::vector<BenchRow> benchmark(const BenchConfig& config);

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace segsub::harness
