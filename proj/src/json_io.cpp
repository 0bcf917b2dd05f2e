#include "gpatoms/json_io.hpp"

#include <cmath>
#include <cstdio>

namespace gpatoms::jsonio {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& why) {
    throw domain_error(path + ": " + why);
}

const json& expect_object(const json& j, const std::string& path) {
    if (!j.is_object()) bad(path, "expected an object");
    return j;
}

const json& expect_array(const json& j, const std::string& path) {
    if (!j.is_array()) bad(path, "expected an array");
    return j;
}

const json& field(const json& j, const char* name, const std::string& path) {
    expect_object(j, path);
    auto it = j.find(name);
    if (it == j.end()) bad(path, std::string("missing field '") + name + "'");
    return *it;
}

}  // namespace

Rational parse_rational(const json& j, const std::string& path) {
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number())
        bad(path, "non-integer numeric literal; write it as \"p/q\" or use --mode float");
    bad(path, "expected a rational as \"p/q\" string or integer");
}

double parse_double(const json& j, const std::string& path) {
    if (j.is_string()) return rational_from_string(j.get<std::string>()).get_d();
    if (j.is_number()) return j.get<double>();
    bad(path, "expected a number or \"p/q\" string");
}

Graph parse_graph(const json& j, const std::string& path) {
    expect_object(j, path);
    std::vector<std::string> vertices;
    const json& vs = field(j, "vertices", path);
    expect_array(vs, path + ".vertices");
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (!vs[i].is_string()) bad(path + ".vertices[" + std::to_string(i) + "]", "expected a string");
        vertices.push_back(vs[i].get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> edges;
    if (j.contains("edges")) {
        const json& es = j["edges"];
        expect_array(es, path + ".edges");
        for (std::size_t i = 0; i < es.size(); ++i) {
            std::string epath = path + ".edges[" + std::to_string(i) + "]";
            expect_array(es[i], epath);
            if (es[i].size() != 2 || !es[i][0].is_string() || !es[i][1].is_string())
                bad(epath, "expected a pair of vertex ids");
            edges.emplace_back(es[i][0].get<std::string>(), es[i][1].get<std::string>());
        }
    }
    return Graph(std::move(vertices), edges);
}

std::map<std::string, Rational> parse_rational_map(const json& j, const std::string& path) {
    expect_object(j, path);
    std::map<std::string, Rational> out;
    for (const auto& [key, value] : j.items()) out.emplace(key, parse_rational(value, path + "." + key));
    return out;
}

std::map<std::string, double> parse_double_map(const json& j, const std::string& path) {
    expect_object(j, path);
    std::map<std::string, double> out;
    for (const auto& [key, value] : j.items()) out.emplace(key, parse_double(value, path + "." + key));
    return out;
}

namespace {

template <typename Scalar, typename SummandT, typename SpecT, typename Parse>
std::map<std::string, SpecT> parse_algebras_impl(const json& j, const std::string& path,
                                                 Parse&& parse_scalar) {
    expect_object(j, path);
    std::map<std::string, SpecT> out;
    for (const auto& [vertex, spec_json] : j.items()) {
        std::string vpath = path + "." + vertex;
        expect_object(spec_json, vpath);
        SpecT spec;
        if (spec_json.contains("diffuse")) {
            if (!spec_json["diffuse"].is_boolean()) bad(vpath + ".diffuse", "expected a boolean");
            spec.has_diffuse_part = spec_json["diffuse"].template get<bool>();
        }
        if (spec_json.contains("summands")) {
            const json& list = spec_json["summands"];
            expect_array(list, vpath + ".summands");
            for (std::size_t k = 0; k < list.size(); ++k) {
                std::string spath = vpath + ".summands[" + std::to_string(k) + "]";
                expect_object(list[k], spath);
                SummandT summand;
                summand.weight = parse_scalar(field(list[k], "weight", spath), spath + ".weight");
                if (list[k].contains("infinite")) {
                    if (!list[k]["infinite"].is_boolean()) bad(spath + ".infinite", "expected a boolean");
                    summand.infinite = list[k]["infinite"].template get<bool>();
                }
                if (summand.infinite) {
                    if (list[k].contains("eigenvalues"))
                        bad(spath, "infinite summands carry no eigenvalues");
                } else {
                    const json& evs = field(list[k], "eigenvalues", spath);
                    expect_array(evs, spath + ".eigenvalues");
                    for (std::size_t e = 0; e < evs.size(); ++e)
                        summand.eigenvalues.push_back(
                            parse_scalar(evs[e], spath + ".eigenvalues[" + std::to_string(e) + "]"));
                }
                spec.summands.push_back(std::move(summand));
            }
        }
        out.emplace(vertex, std::move(spec));
    }
    return out;
}

}  // namespace

atoms::AlgebraMap parse_algebras(const json& j, const std::string& path) {
    return parse_algebras_impl<Rational, atoms::Summand, atoms::VertexAlgebraSpec>(
        j, path, [](const json& v, const std::string& p) { return parse_rational(v, p); });
}

atoms::AlgebraMapFloat parse_algebras_float(const json& j, const std::string& path) {
    return parse_algebras_impl<double, atoms::SummandFloat, atoms::VertexAlgebraSpecFloat>(
        j, path, [](const json& v, const std::string& p) { return parse_double(v, p); });
}

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    return json{{"vertices", g.vertices()}, {"edges", edges}};
}

json to_json(const atoms::MeetReport& report) {
    return json{{"nonzero", report.nonzero}, {"value", rational_to_string(report.value)}};
}

json to_json(const atoms::MeetReportFloat& report) {
    return json{{"nonzero", report.nonzero},
                {"value", format_double(report.value)},
                {"approximate", true}};
}

namespace {

template <typename ReportT, typename Format>
json atom_report_impl(const ReportT& report, Format&& format) {
    json selection = json::object();
    for (const auto& [v, idx] : report.selection) selection[v] = idx;
    json dims = json::object();
    for (const auto& [v, n] : report.dimensions) dims[v] = n;
    json minimal = json::array();
    for (const auto& [indices, value] : report.minimal_projection_weights)
        minimal.push_back(json{{"indices", indices}, {"weight", format(value)}});
    json eigen = json::array();
    for (const auto& value : report.density_eigenvalues) eigen.push_back(format(value));
    return json{{"selection", selection},
                {"support_clique", report.support_clique},
                {"infinite_part", report.infinite_part},
                {"dimensions", dims},
                {"weight", format(report.weight)},
                {"finite_part_weight", format(report.finite_part_weight)},
                {"weight_status", report.weight_derived ? "derived" : "exact"},
                {"density_eigenvalues", eigen},
                {"minimal_projection_weights", minimal}};
}

}  // namespace

json to_json(const atoms::AtomReport& report) {
    return atom_report_impl(report, [](const Rational& r) { return rational_to_string(r); });
}

json to_json(const atoms::AtomReportFloat& report) {
    return atom_report_impl(report, [](double d) { return format_double(d); });
}

json to_json(const atoms::AtomEnumeration& result) {
    json list = json::array();
    for (const auto& atom : result.atoms) list.push_back(to_json(atom));
    return json{{"atoms", list},
                {"atom_count", result.atoms.size()},
                {"total_atomic_mass", rational_to_string(result.total_mass)},
                {"selections_examined", result.selections_examined}};
}

json to_json(const atoms::AtomEnumerationFloat& result) {
    json list = json::array();
    for (const auto& atom : result.atoms) list.push_back(to_json(atom));
    return json{{"atoms", list},
                {"atom_count", result.atoms.size()},
                {"total_atomic_mass", format_double(result.total_mass)},
                {"selections_examined", result.selections_examined},
                {"approximate", true}};
}

json to_json(const RhoResult& result) {
    return json{{"lo", rational_to_string(result.interval.lo)},
                {"hi", rational_to_string(result.interval.hi)},
                {"hit_cap", result.hit_cap}};
}

json to_json(const BoundaryClassification& result) {
    json out{{"on_boundary", result.on_boundary}};
    if (result.on_boundary) out["gradient_vanishes"] = result.gradient_vanishes;
    if (result.witness_split) {
        out["witness_split"] =
            json{{"first", result.witness_split->first}, {"second", result.witness_split->second}};
    }
    return out;
}

}  // namespace gpatoms::jsonio
