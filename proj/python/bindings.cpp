#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ngrank/closed_forms.hpp"
#include "ngrank/constructions.hpp"
#include "ngrank/graph6.hpp"
#include "ngrank/sweep.hpp"
#include "ngrank/verifiers.hpp"

namespace py = pybind11;
using namespace ngrank;

namespace {

py::object fraction(const Rational& r) {
    static const py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(r.numerator(), r.denominator());
}

std::vector<TheoremId> parse_checks(const std::optional<std::vector<std::string>>& names) {
    if (!names) return {kAllTheorems.begin(), kAllTheorems.end()};
    std::vector<TheoremId> out;
    for (const auto& s : *names) out.push_back(parse_theorem_id(s));
    return out;
}

SweepOptions make_options(const std::optional<std::vector<std::string>>& checks, const std::string& mode,
                          std::size_t workers, std::optional<std::uint64_t> prime) {
    SweepOptions o;
    o.checks = parse_checks(checks);
    o.mode = parse_sweep_mode(mode);
    o.workers = workers;
    o.prime = prime;
    return o;
}

}  // namespace

PYBIND11_MODULE(_ngrank, m) {
    m.doc() = "Exact complement-rank computations on graphs";

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t>(), py::arg("n"))
        .def_static("from_graph6", &parse_graph6, py::arg("text"))
        .def_static("family", [](const std::string& text) { return make_family(FamilySpec::parse(text)); },
                    py::arg("spec"), "Build from a family expression such as \"P4+P4+K1\" or \"!K2,3\".")
        .def_static("from_edges",
                    [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
                        Graph g(n);
                        for (auto [i, j] : edges) g.add_edge(i, j);
                        return g;
                    },
                    py::arg("n"), py::arg("edges"))
        .def("add_edge", &Graph::add_edge)
        .def("adjacent", &Graph::adjacent)
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("complement", [](const Graph& g) { return complement(g); })
        .def("to_graph6", [](const Graph& g) { return emit_graph6(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) { return "Graph('" + emit_graph6(g) + "')"; });

    py::class_<RankPair>(m, "RankPair")
        .def_readonly("n", &RankPair::n)
        .def_readonly("f_g", &RankPair::f_g)
        .def_readonly("f_gbar", &RankPair::f_gbar)
        .def_property_readonly("product", &RankPair::product)
        .def_property_readonly("sum", &RankPair::sum)
        .def("__eq__", [](const RankPair& a, const RankPair& b) { return a == b; })
        .def("__iter__", [](const RankPair& r) { return py::iter(py::make_tuple(r.f_g, r.f_gbar)); })
        .def("__repr__", [](const RankPair& r) {
            return "RankPair(n=" + std::to_string(r.n) + ", f_g=" + std::to_string(r.f_g) +
                   ", f_gbar=" + std::to_string(r.f_gbar) + ")";
        });

    m.def("rank_pair", &complement_rank_pair, py::arg("g"), "(rank(A+I), rank(J-A)) by exact elimination.");
    m.def("rank_pair_mod_p",
          [](const Graph& g, std::uint64_t p) { return complement_rank_pair_mod_p(g, Prime(p)); },
          py::arg("g"), py::arg("p"));

    py::class_<BoundVerdict>(m, "BoundVerdict")
        .def_property_readonly("theorem_id", [](const BoundVerdict& v) { return std::string(to_string(v.theorem_id)); })
        .def_readonly("applicable", &BoundVerdict::applicable)
        .def_readonly("bound", &BoundVerdict::bound)
        .def_readonly("achieved", &BoundVerdict::achieved)
        .def_readonly("holds", &BoundVerdict::holds)
        .def_readonly("equality", &BoundVerdict::equality)
        .def_readonly("characterization_match", &BoundVerdict::characterization_match)
        .def_readonly("detail", &BoundVerdict::detail)
        .def_property_readonly("is_violation", &BoundVerdict::is_violation);

    m.attr("THEOREMS") = [] {
        py::list l;
        for (auto id : kAllTheorems) l.append(std::string(to_string(id)));
        return l;
    }();
    m.def("verify", [](const Graph& g, const std::string& id) { return verify(parse_theorem_id(id), graph_facts(g)); },
          py::arg("g"), py::arg("theorem"));

    py::class_<SmallRankClassification>(m, "SmallRankClassification")
        .def_property_readonly("rank_class",
                               [](const SmallRankClassification& c) { return std::string(to_string(c.rank_class)); })
        .def_readonly("rank", &SmallRankClassification::rank)
        .def_readonly("cross_check", &SmallRankClassification::cross_check);
    m.def("classify_small_rank", &classify_small_rank, py::arg("g"));

    py::class_<MultiplicityRecord>(m, "MultiplicityRecord")
        .def_readonly("n", &MultiplicityRecord::n)
        .def_readonly("m_minus1", &MultiplicityRecord::m_minus1)
        .def_readonly("m0_restricted", &MultiplicityRecord::m0_restricted)
        .def_property_readonly("multiplicity_sum", &MultiplicityRecord::multiplicity_sum)
        .def_readonly("reconstruction_ok", &MultiplicityRecord::reconstruction_ok)
        .def_readonly("within_dimension", &MultiplicityRecord::within_dimension)
        .def_readonly("extremal_characterization_ok", &MultiplicityRecord::extremal_characterization_ok)
        .def_readonly("kernel_in_w_dim", &MultiplicityRecord::kernel_in_w_dim);
    m.def("multiplicity_identities", py::overload_cast<const Graph&>(&multiplicity_identities), py::arg("g"));

    py::class_<Construction>(m, "Construction")
        .def_readonly("graph", &Construction::graph)
        .def_property_readonly("recipe",
                               [](const Construction& c) { return c.certificate.recipe.as_family().to_string(); })
        .def_property_readonly("case_id", [](const Construction& c) { return c.certificate.recipe.case_id; })
        .def_property_readonly("rank_pair", [](const Construction& c) { return c.certificate.rank_pair; })
        .def_property_readonly("claim", [](const Construction& c) { return std::string(to_string(c.certificate.claim)); })
        .def_property_readonly("verified", [](const Construction& c) { return c.certificate.verified; });
    m.def("build_fullrank", &build_fullrank, py::arg("n"));
    m.def("tightness_witness",
          [](const std::string& claim, std::size_t n, int variant) { return tightness_witness(parse_claim(claim), n, variant); },
          py::arg("claim"), py::arg("n"), py::arg("variant") = 0);

    m.def("path_complement_rank", &path_complement_rank, py::arg("m"));
    m.def("path_eigenvalues", [](std::size_t k) { return path_spectrum(k).values; }, py::arg("m"));
    m.def("kernel_of_j_minus_path",
          [](std::size_t k) {
              const auto t = kernel_of_j_minus_path(k);
              py::dict d;
              d["m"] = t.m;
              d["branch"] = t.branch;
              d["a_per_c"] = fraction(t.a_per_c);
              d["b_per_c"] = fraction(t.b_per_c);
              d["y_sum_per_c"] = fraction(t.y_sum_per_c);
              d["c_coefficient"] = fraction(t.c_coefficient);
              d["recurrence_consistent"] = t.recurrence_consistent;
              d["kernel_dim"] = t.kernel_dim;
              d["elimination_kernel_dim"] = t.elimination_kernel_dim;
              return d;
          },
          py::arg("m"));

    py::class_<SweepReport>(m, "SweepReport")
        .def_readonly("graph_count", &SweepReport::graph_count)
        .def_readonly("reverified", &SweepReport::reverified)
        .def_readonly("prime", &SweepReport::prime)
        .def_readonly("seconds", &SweepReport::seconds)
        .def_property_readonly("violations",
                               [](const SweepReport& r) {
                                   py::list l;
                                   for (const auto& v : r.violations)
                                       l.append(py::make_tuple(v.graph6, std::string(to_string(v.theorem_id)), v.detail));
                                   return l;
                               })
        .def_property_readonly("equality_counts",
                               [](const SweepReport& r) {
                                   py::dict d;
                                   for (const auto& [id, inv] : r.equality_inventory)
                                       d[py::str(std::string(to_string(id)))] = inv.count;
                                   return d;
                               })
        .def("equality_graphs",
             [](const SweepReport& r, const std::string& id) {
                 const auto it = r.equality_inventory.find(parse_theorem_id(id));
                 return it == r.equality_inventory.end() ? std::vector<std::string>{} : it->second.graphs;
             })
        .def_readonly("histogram", &SweepReport::rank_pair_histogram)
        .def("to_jsonl", [](const SweepReport& r) {
            std::ostringstream out;
            write_report(r, ReportFormat::Jsonl, out);
            return out.str();
        });

    m.def("sweep_labeled",
          [](std::size_t n, std::optional<std::vector<std::string>> checks, const std::string& mode, std::size_t workers,
             std::optional<std::uint64_t> prime) {
              const auto options = make_options(checks, mode, workers, prime);
              py::gil_scoped_release release;
              return sweep(SweepSource::labeled(n), options);
          },
          py::arg("n"), py::arg("checks") = py::none(), py::arg("mode") = "exact", py::arg("workers") = 0,
          py::arg("prime") = py::none());
    m.def("sweep_file",
          [](const std::string& path, std::optional<std::vector<std::string>> checks, const std::string& mode,
             std::size_t workers, bool lenient) {
              const auto options = make_options(checks, mode, workers, std::nullopt);
              py::gil_scoped_release release;
              return sweep(SweepSource::file(path, lenient), options);
          },
          py::arg("path"), py::arg("checks") = py::none(), py::arg("mode") = "exact", py::arg("workers") = 0,
          py::arg("lenient") = false);
}
