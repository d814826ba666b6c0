#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "segsub/core.hpp"
#include "segsub/indseglcs.hpp"
#include "segsub/oracle.hpp"
#include "segsub/reduction.hpp"
#include "segsub/segmatch.hpp"
#include "segsub/seglcs.hpp"

namespace py = pybind11;
using namespace segsub;

namespace {

// Accepts str or bytes; str is encoded as UTF-8 and treated as raw bytes.
Text to_text(const py::object& value) {
  if (py::isinstance<py::bytes>(value)) return Text(value.cast<std::string>());
  if (py::isinstance<py::str>(value)) return Text(value.cast<std::string>());
  throw py::type_error("expected str or bytes");
}

Budget to_budget(long long f) { return Budget(f); }

SegeAlgo sege_algo(const std::string& name) {
  if (name == "auto") return SegeAlgo::Auto;
  if (name == "dp") return SegeAlgo::Dp;
  if (name == "kmp2") return SegeAlgo::Kmp2;
  throw py::value_error("algo must be 'auto', 'dp' or 'kmp2'");
}

SlcsAlgo slcs_algo(const std::string& name) {
  if (name == "diagonal") return SlcsAlgo::Diagonal;
  if (name == "baseline") return SlcsAlgo::Baseline;
  throw py::value_error("algo must be 'diagonal' or 'baseline'");
}

FamilyChoice family(const std::string& name) {
  if (name == "auto") return FamilyChoice::Auto;
  if (name == "count") return FamilyChoice::Count;
  if (name == "score") return FamilyChoice::Score;
  throw py::value_error("family must be 'auto', 'count' or 'score'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Segment-constrained subsequence matching and segmental LCS";

  py::register_exception<oracle::SizeLimitError>(m, "SizeLimitError", PyExc_ValueError);

  m.def("min_segments", [](const py::object& t, const py::object& p) { return min_segments(to_text(t), to_text(p)); },
        py::arg("text"), py::arg("pattern"),
        "Smallest segment budget that embeds pattern into text, or None.");
  m.def("sege",
        [](const py::object& t, const py::object& p, long long f, const std::string& algo) {
          return sege(to_text(t), to_text(p), to_budget(f), sege_algo(algo));
        },
        py::arg("text"), py::arg("pattern"), py::arg("segments"), py::arg("algo") = "auto");
  m.def("compute_lpf", [](const py::object& t, const py::object& p) { return compute_lpf(to_text(t), to_text(p)); },
        py::arg("text"), py::arg("pattern"));
  m.def("compute_lsf", [](const py::object& t, const py::object& p) { return compute_lsf(to_text(t), to_text(p)); },
        py::arg("text"), py::arg("pattern"));
  m.def("compute_llpf", [](const py::object& t, const py::object& p) { return compute_llpf(to_text(t), to_text(p)); },
        py::arg("text"), py::arg("pattern"));
  m.def("seg2_linear", [](const py::object& t, const py::object& p) { return seg2_linear(to_text(t), to_text(p)); },
        py::arg("text"), py::arg("pattern"));

  m.def("slcs",
        [](const py::object& a, const py::object& b, long long f, const std::string& algo) {
          return slcs(to_text(a), to_text(b), to_budget(f), slcs_algo(algo));
        },
        py::arg("t1"), py::arg("t2"), py::arg("segments"), py::arg("algo") = "diagonal");
  m.def("slcs_with_stats",
        [](const py::object& a, const py::object& b, long long f, const std::string& algo) {
          SolveStats stats;
          const auto length = slcs(to_text(a), to_text(b), to_budget(f), slcs_algo(algo), &stats);
          py::dict out;
          out["length"] = length;
          out["cell_visits"] = stats.cell_visits;
          out["per_budget"] = stats.per_budget;
          out["diagonals"] = stats.diagonals;
          return out;
        },
        py::arg("t1"), py::arg("t2"), py::arg("segments"), py::arg("algo") = "diagonal");
  m.def("slcs_witness",
        [](const py::object& a, const py::object& b, long long f) {
          const auto w = slcs_witness(to_text(a), to_text(b), to_budget(f));
          py::list segments;
          for (const auto& s : w.segmentation.segments) segments.append(py::bytes(s));
          return py::make_tuple(w.length, segments, w.in_first.starts, w.in_second.starts);
        },
        py::arg("t1"), py::arg("t2"), py::arg("segments"),
        "(length, segments, starts in t1, starts in t2); starts are 1-based.");

  m.def("indseglcs",
        [](const py::object& a, const py::object& b, long long f1, long long f2, const std::string& fam) {
          IndSegOptions options;
          options.first = options.second = family(fam);
          return indseglcs(to_text(a), to_text(b), to_budget(f1), to_budget(f2), options);
        },
        py::arg("t1"), py::arg("t2"), py::arg("f1"), py::arg("f2"), py::arg("family") = "auto");

  m.def("build_episode_reduction",
        [](const py::object& t, const py::object& p, std::size_t h) {
          const auto r = build_episode_reduction(to_text(t), to_text(p), h);
          return py::make_tuple(py::bytes(r.text.str()), py::bytes(r.pattern.str()), r.segments);
        },
        py::arg("text"), py::arg("pattern"), py::arg("bound"));
  m.def("check_reduction_equivalence",
        [](const py::object& t, const py::object& p, std::size_t h) {
          return check_reduction_equivalence(to_text(t), to_text(p), h);
        },
        py::arg("text"), py::arg("pattern"), py::arg("bound"));

  auto o = m.def_submodule("oracle", "Exponential-time reference implementations");
  o.def("min_segments",
        [](const py::object& t, const py::object& p, std::size_t limit) {
          return oracle::min_segments_bruteforce(to_text(t), to_text(p), {limit});
        },
        py::arg("text"), py::arg("pattern"), py::arg("max_length") = 14);
  o.def("slcs",
        [](const py::object& a, const py::object& b, long long f, std::size_t limit) {
          return oracle::slcs_bruteforce(to_text(a), to_text(b), to_budget(f), {limit});
        },
        py::arg("t1"), py::arg("t2"), py::arg("segments"), py::arg("max_length") = 14);
  o.def("indseglcs",
        [](const py::object& a, const py::object& b, long long f1, long long f2, std::size_t limit) {
          return oracle::indseglcs_bruteforce(to_text(a), to_text(b), to_budget(f1), to_budget(f2), {limit});
        },
        py::arg("t1"), py::arg("t2"), py::arg("f1"), py::arg("f2"), py::arg("max_length") = 14);
  o.def("episode",
        [](const py::object& t, const py::object& p, std::size_t h, std::size_t limit) {
          return oracle::episode_bruteforce(to_text(t), to_text(p), h, {limit});
        },
        py::arg("text"), py::arg("pattern"), py::arg("bound"), py::arg("max_length") = 14);
}
