#pragma once

#include <json.hpp>

#include "gpatoms/atoms.hpp"
#include "gpatoms/graph.hpp"
#include "gpatoms/rational.hpp"
#include "gpatoms/region.hpp"

namespace gpatoms::jsonio {

using nlohmann::json;

// Exact-mode scalar: "p/q" string or JSON integer.  Non-integer numbers are
// rejected (use float mode for irrational data).
Rational parse_rational(const json& j, const std::string& path);
// Float-mode scalar: any JSON number or a "p/q" string.
double parse_double(const json& j, const std::string& path);

// {"vertices": ["a", ...], "edges": [["a","b"], ...]}
Graph parse_graph(const json& j, const std::string& path);

std::map<std::string, Rational> parse_rational_map(const json& j, const std::string& path);
std::map<std::string, double> parse_double_map(const json& j, const std::string& path);

// {"v": {"summands": [{"weight": ..., "eigenvalues": [...]} |
//                     {"weight": ..., "infinite": true}, ...],
//        "diffuse": bool}, ...}
atoms::AlgebraMap parse_algebras(const json& j, const std::string& path);
atoms::AlgebraMapFloat parse_algebras_float(const json& j, const std::string& path);

// 12 significant digits, the float-mode output convention
std::string format_double(double value);

json to_json(const atoms::MeetReport& report);
json to_json(const atoms::MeetReportFloat& report);
json to_json(const atoms::AtomReport& report);
json to_json(const atoms::AtomReportFloat& report);
json to_json(const atoms::AtomEnumeration& result);
json to_json(const atoms::AtomEnumerationFloat& result);
json to_json(const RhoResult& result);
json to_json(const BoundaryClassification& result);

json graph_to_json(const Graph& g);

}  // namespace gpatoms::jsonio
