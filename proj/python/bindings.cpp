#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gpatoms/atoms.hpp"
#include "gpatoms/clique_poly.hpp"
#include "gpatoms/errors.hpp"
#include "gpatoms/graph.hpp"
#include "gpatoms/json_io.hpp"
#include "gpatoms/rational.hpp"
#include "gpatoms/region.hpp"
#include "gpatoms/words.hpp"

namespace py = pybind11;
using namespace gpatoms;
using nlohmann::json;

namespace {

using StringMap = std::map<std::string, std::string>;
using DoubleMap = std::map<std::string, double>;

std::map<std::string, Rational> to_rational_map(const StringMap& m) {
    std::map<std::string, Rational> out;
    for (const auto& [key, value] : m) out[key] = rational_from_string(value);
    return out;
}

// exact integer/rational results cross as strings; counts become Python ints
py::object py_int(const Rational& q) {
    return py::module_::import("builtins").attr("int")(rational_to_string(q));
}

py::list py_int_list(const std::vector<Rational>& values) {
    py::list out;
    for (const Rational& v : values) out.append(py_int(v));
    return out;
}

json parse_json_arg(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw domain_error(std::string(what) + ": malformed JSON: " + e.what());
    }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact classification of atomic summands in graph products";

    py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);
    py::register_exception<cap_exceeded>(m, "CapExceeded", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::vector<std::string>,
                      const std::vector<std::pair<std::string, std::string>>&>(),
             py::arg("vertices"),
             py::arg("edges") = std::vector<std::pair<std::string, std::string>>{})
        .def_property_readonly("vertices",
                               [](const Graph& g) { return g.vertices(); })
        .def_property_readonly("edges", &Graph::edges)
        .def("adjacent",
             [](const Graph& g, const std::string& u, const std::string& v) {
                 return g.adjacent(u, v);
             })
        .def("is_complete", &Graph::is_complete)
        .def("complement", &Graph::complement)
        .def("induced_subgraph",
             [](const Graph& g, const std::vector<std::string>& keep) {
                 return g.induced_subgraph(keep);
             })
        .def("neighborhood_subgraph", &Graph::neighborhood_subgraph)
        .def("cliques", &Graph::cliques)
        .def("join_decomposition", &Graph::join_decomposition)
        .def("__len__", &Graph::size)
        .def("__repr__", [](const Graph& g) {
            return "Graph(" + std::to_string(g.size()) + " vertices, " +
                   std::to_string(g.edge_count()) + " edges)";
        });

    // ---- clique polynomial ----
    m.def(
        "clique_value",
        [](const Graph& g, const StringMap& x) {
            return rational_to_string(CliquePolynomial(g).evaluate(to_rational_map(x)));
        },
        py::arg("graph"), py::arg("x"),
        "Exact K_G(x); x maps every vertex to a rational string like '3/10'.");
    m.def(
        "clique_value_float",
        [](const Graph& g, const DoubleMap& x) { return CliquePolynomial(g).evaluate(x); },
        py::arg("graph"), py::arg("x"));
    m.def(
        "partial_derivative",
        [](const Graph& g, const std::string& v, const StringMap& x) {
            return rational_to_string(
                CliquePolynomial(g).partial_derivative(v, to_rational_map(x)));
        },
        py::arg("graph"), py::arg("vertex"), py::arg("x"));

    // ---- region ----
    m.def(
        "region_membership",
        [](const Graph& g, const StringMap& x) {
            return region_membership(g, to_rational_map(x));
        },
        py::arg("graph"), py::arg("x"));
    m.def(
        "region_membership_float",
        [](const Graph& g, const DoubleMap& x, double eps) {
            return region_membership_float(g, x, eps);
        },
        py::arg("graph"), py::arg("x"), py::arg("eps") = 1e-9);
    m.def(
        "rho",
        [](const Graph& g, const StringMap& u, const std::string& precision) {
            auto result = rho(g, to_rational_map(u), rational_from_string(precision));
            py::dict out;
            out["lo"] = rational_to_string(result.interval.lo);
            out["hi"] = rational_to_string(result.interval.hi);
            out["hit_cap"] = result.hit_cap;
            return out;
        },
        py::arg("graph"), py::arg("u"),
        py::arg("precision") = rational_to_string(default_root_precision()),
        "Isolating interval for the boundary radius along the ray u.");
    m.def(
        "classify_boundary_point",
        [](const Graph& g, const StringMap& x) {
            auto result = classify_boundary_point(g, to_rational_map(x));
            py::dict out;
            out["on_boundary"] = result.on_boundary;
            if (result.on_boundary) out["gradient_vanishes"] = result.gradient_vanishes;
            if (result.witness_split)
                out["witness_split"] =
                    py::make_tuple(result.witness_split->first, result.witness_split->second);
            return out;
        },
        py::arg("graph"), py::arg("x"));

    // ---- words ----
    m.def(
        "is_reduced",
        [](const Graph& g, const words::Word& w) { return words::is_reduced(g, w); },
        py::arg("graph"), py::arg("word"));
    m.def(
        "canonical_form",
        [](const Graph& g, const words::Word& w) { return words::canonical_form(g, w); },
        py::arg("graph"), py::arg("word"));
    m.def(
        "count_reduced_classes",
        [](const Graph& g, std::size_t max_len) {
            return py_int_list(words::count_reduced_classes_series(g, max_len).coefficients());
        },
        py::arg("graph"), py::arg("max_len"),
        "Number of reduced-word classes by length, 0..max_len.");
    m.def(
        "count_all_word_classes",
        [](const Graph& g, std::size_t max_len, std::size_t cap) {
            return py_int_list(words::count_all_word_classes(g, max_len, cap));
        },
        py::arg("graph"), py::arg("max_len"), py::arg("cap") = kDefaultCap);
    m.def(
        "enumerate_reduced_classes",
        [](const Graph& g, std::size_t length, std::size_t cap) {
            return words::enumerate_reduced_classes(g, length, cap);
        },
        py::arg("graph"), py::arg("length"), py::arg("cap") = kDefaultCap);
    m.def(
        "cartier_foata_check",
        [](const Graph& g, std::size_t max_len, std::size_t cap) {
            auto report = words::cartier_foata_identity_check(g, max_len, cap);
            py::dict out;
            out["reduced_identity"] = report.reduced_identity;
            out["unreduced_identity"] = report.unreduced_identity;
            out["reduced_counts"] = py_int_list(report.reduced_counts);
            out["all_class_counts"] = py_int_list(report.all_class_counts);
            return out;
        },
        py::arg("graph"), py::arg("max_len"), py::arg("cap") = 4 * kDefaultCap,
        "Verify both reciprocal identities between class counts and K_G.");

    // ---- atoms ----
    m.def(
        "projection_meet",
        [](const Graph& g, const StringMap& p) {
            auto report = atoms::projection_meet(g, to_rational_map(p));
            py::dict out;
            out["nonzero"] = report.nonzero;
            out["value"] = rational_to_string(report.value);
            return out;
        },
        py::arg("graph"), py::arg("p"),
        "Weight of the meet of one trace-p_v projection per vertex.");
    m.def(
        "projection_meet_float",
        [](const Graph& g, const DoubleMap& p, double eps) {
            auto report = atoms::projection_meet_float(g, p, eps);
            py::dict out;
            out["nonzero"] = report.nonzero;
            out["value"] = report.value;
            return out;
        },
        py::arg("graph"), py::arg("p"), py::arg("eps") = 1e-9);

    // Algebra specifications travel as JSON text in the same schema the CLI
    // reads; reports come back as JSON text in the same schema it writes.
    m.def(
        "enumerate_atoms_json",
        [](const Graph& g, const std::string& algebras, std::size_t cap) {
            auto parsed = jsonio::parse_algebras(parse_json_arg(algebras, "algebras"), "algebras");
            return jsonio::to_json(atoms::enumerate_atoms(g, parsed, cap)).dump();
        },
        py::arg("graph"), py::arg("algebras"), py::arg("cap") = kDefaultCap);
    m.def(
        "enumerate_atoms_float_json",
        [](const Graph& g, const std::string& algebras, double eps, std::size_t cap) {
            auto parsed =
                jsonio::parse_algebras_float(parse_json_arg(algebras, "algebras"), "algebras");
            return jsonio::to_json(atoms::enumerate_atoms_float(g, parsed, eps, cap)).dump();
        },
        py::arg("graph"), py::arg("algebras"), py::arg("eps") = 1e-9,
        py::arg("cap") = kDefaultCap);
    m.def(
        "classify_selection_json",
        [](const Graph& g, const std::string& algebras,
           const atoms::SummandSelection& selection) -> py::object {
            auto parsed = jsonio::parse_algebras(parse_json_arg(algebras, "algebras"), "algebras");
            auto report = atoms::classify_selection(g, parsed, selection);
            if (!report) return py::none();
            return py::str(jsonio::to_json(*report).dump());
        },
        py::arg("graph"), py::arg("algebras"), py::arg("selection"));
    m.def(
        "truncated_series_crosscheck",
        [](const Graph& g, const std::string& algebras, const atoms::SummandSelection& selection,
           std::size_t max_len, std::size_t cap) {
            auto parsed = jsonio::parse_algebras(parse_json_arg(algebras, "algebras"), "algebras");
            auto result = atoms::truncated_series_crosscheck(g, parsed, selection, max_len, cap);
            py::dict out;
            out["partial_sum"] = rational_to_string(result.partial_sum);
            out["closed_form"] = rational_to_string(result.closed_form);
            return out;
        },
        py::arg("graph"), py::arg("algebras"), py::arg("selection"), py::arg("max_len"),
        py::arg("cap") = kDefaultCap);

    m.attr("DEFAULT_CAP") = py::int_(kDefaultCap);
    m.attr("DEFAULT_ROOT_PRECISION") = py::str(rational_to_string(default_root_precision()));
}
