#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <bit>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "gpatoms/atoms.hpp"
#include "gpatoms/clique_poly.hpp"
#include "gpatoms/errors.hpp"
#include "gpatoms/graph.hpp"
#include "gpatoms/json_io.hpp"
#include "gpatoms/region.hpp"
#include "gpatoms/words.hpp"

namespace {

using gpatoms::Graph;
using gpatoms::Rational;
using nlohmann::json;
namespace jio = gpatoms::jsonio;

struct Options {
    std::string mode = "exact";
    double eps = 1e-9;
    std::size_t cap = gpatoms::kDefaultCap;
    bool cap_given = false;
    std::string precision_text;
    std::string output = "json";

    bool exact() const { return mode == "exact"; }
    Rational precision() const {
        if (precision_text.empty()) return gpatoms::default_root_precision();
        Rational p = gpatoms::rational_from_string(precision_text);
        if (gpatoms::sign(p) <= 0) throw gpatoms::domain_error("--precision must be positive");
        return p;
    }
};

json load_input(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream in(path);
        if (!in) throw gpatoms::domain_error("cannot open input file: " + path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw gpatoms::domain_error(std::string("malformed JSON: ") + e.what());
    }
}

const json& field(const json& input, const char* name) {
    if (!input.is_object()) throw gpatoms::domain_error("input: expected a JSON object");
    auto it = input.find(name);
    if (it == input.end())
        throw gpatoms::domain_error(std::string("input: missing field '") + name + "'");
    return *it;
}

void require_exact(const Options& opt, const char* command) {
    if (!opt.exact())
        throw gpatoms::domain_error(std::string(command) +
                                    ": float mode is not supported; run with --mode exact");
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string join_names(const std::vector<std::string>& names, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += sep;
        out += names[i];
    }
    return out;
}

std::string render_clique_polynomial(const Graph& g) {
    // Terms in degree-major order (then lex within a degree), the usual way to
    // write the polynomial; clique enumeration order itself is pure lex.
    auto masks = g.clique_masks();
    std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
        return std::popcount(a) < std::popcount(b);
    });
    std::string out;
    for (std::uint64_t mask : masks) {
        auto members = g.mask_to_clique(mask);
        std::string term;
        if (members.empty()) {
            term = "1";
        } else {
            for (std::size_t i = 0; i < members.size(); ++i) {
                if (i) term += "*";
                term += "x_" + members[i];
            }
        }
        if (out.empty()) {
            out = term;
        } else {
            out += (members.size() % 2 == 1) ? " - " : " + ";
            out += term;
        }
    }
    return out;
}

template <typename SelectionT>
std::string render_selection(const SelectionT& selection) {
    std::string out;
    for (const auto& [v, idx] : selection) {
        if (!out.empty()) out += " ";
        out += v + ":" + std::to_string(idx);
    }
    return out;
}

// ---- command runners --------------------------------------------------

void run_atoms(const json& input, const Options& opt) {
    Graph g = jio::parse_graph(field(input, "graph"), "graph");
    if (opt.exact()) {
        auto algebras = jio::parse_algebras(field(input, "algebras"), "algebras");
        auto result = gpatoms::atoms::enumerate_atoms(g, algebras, opt.cap);
        if (opt.output == "json") {
            print_json(jio::to_json(result));
        } else {
            std::cout << "atoms: " << result.atoms.size() << "\n";
            for (const auto& atom : result.atoms) {
                std::cout << "  selection(" << render_selection(atom.selection) << ")"
                          << " support={" << join_names(atom.support_clique) << "}"
                          << " infinite={" << join_names(atom.infinite_part) << "}"
                          << " weight=" << gpatoms::rational_to_string(atom.weight) << "\n";
            }
            std::cout << "total atomic mass: " << gpatoms::rational_to_string(result.total_mass)
                      << "\n"
                      << "selections examined: " << result.selections_examined << "\n";
        }
    } else {
        auto algebras = jio::parse_algebras_float(field(input, "algebras"), "algebras");
        auto result = gpatoms::atoms::enumerate_atoms_float(g, algebras, opt.eps, opt.cap);
        if (opt.output == "json") {
            print_json(jio::to_json(result));
        } else {
            std::cout << "atoms: " << result.atoms.size() << " (approximate)\n";
            for (const auto& atom : result.atoms) {
                std::cout << "  selection(" << render_selection(atom.selection) << ")"
                          << " support={" << join_names(atom.support_clique) << "}"
                          << " infinite={" << join_names(atom.infinite_part) << "}"
                          << " weight=" << jio::format_double(atom.weight) << "\n";
            }
            std::cout << "total atomic mass: " << jio::format_double(result.total_mass) << "\n"
                      << "selections examined: " << result.selections_examined << "\n";
        }
    }
}

void run_meet(const json& input, const Options& opt) {
    Graph g = jio::parse_graph(field(input, "graph"), "graph");
    if (opt.exact()) {
        auto p = jio::parse_rational_map(field(input, "projections"), "projections");
        auto report = gpatoms::atoms::projection_meet(g, p);
        if (opt.output == "json") {
            print_json(jio::to_json(report));
        } else {
            std::cout << "nonzero: " << (report.nonzero ? "true" : "false") << "\n"
                      << "value: " << gpatoms::rational_to_string(report.value) << "\n";
        }
    } else {
        auto p = jio::parse_double_map(field(input, "projections"), "projections");
        auto report = gpatoms::atoms::projection_meet_float(g, p, opt.eps);
        if (opt.output == "json") {
            print_json(jio::to_json(report));
        } else {
            std::cout << "nonzero: " << (report.nonzero ? "true" : "false") << "\n"
                      << "value: " << jio::format_double(report.value) << " (approximate)\n";
        }
    }
}

void run_region_check(const json& input, const Options& opt) {
    Graph g = jio::parse_graph(field(input, "graph"), "graph");
    bool member = false;
    if (opt.exact()) {
        auto x = jio::parse_rational_map(field(input, "x"), "x");
        member = gpatoms::region_membership(g, x);
    } else {
        auto x = jio::parse_double_map(field(input, "x"), "x");
        member = gpatoms::region_membership_float(g, x, opt.eps);
    }
    if (opt.output == "json") {
        json out{{"member", member}};
        if (!opt.exact()) out["approximate"] = true;
        print_json(out);
    } else {
        std::cout << "member: " << (member ? "true" : "false") << "\n";
    }
}

void run_region_rho(const json& input, const Options& opt) {
    require_exact(opt, "region-rho");
    Graph g = jio::parse_graph(field(input, "graph"), "graph");
    Rational precision = opt.precision();
    if (input.contains("rays")) {
        // Sweep mode: one CSV row per ray, for external plotting.
        const json& rays = input["rays"];
        if (!rays.is_array()) throw gpatoms::domain_error("rays: expected an array");
        for (std::size_t i = 0; i < g.vertices().size(); ++i)
            std::cout << "u_" << g.vertices()[i] << ",";
        std::cout << "rho,hit_cap\n";
        for (std::size_t r = 0; r < rays.size(); ++r) {
            auto u = jio::parse_rational_map(rays[r], "rays[" + std::to_string(r) + "]");
            auto result = gpatoms::rho(g, u, precision);
            for (const auto& v : g.vertices()) {
                auto it = u.find(v);
                Rational uv = (it == u.end()) ? Rational(0) : it->second;
                std::cout << jio::format_double(gpatoms::to_double(uv)) << ",";
            }
            Rational mid = (result.interval.lo + result.interval.hi) / 2;
            std::cout << jio::format_double(gpatoms::to_double(mid)) << ","
                      << (result.hit_cap ? 1 : 0) << "\n";
        }
        return;
    }
    auto u = jio::parse_rational_map(field(input, "u"), "u");
    auto result = gpatoms::rho(g, u, precision);
    if (opt.output == "json") {
        print_json(jio::to_json(result));
    } else {
        std::cout << "rho in [" << gpatoms::rational_to_string(result.interval.lo) << ", "
                  << gpatoms::rational_to_string(result.interval.hi) << "]\n"
                  << "hit_cap: " << (result.hit_cap ? "true" : "false") << "\n";
    }
}

void run_region_classify(const json& input, const Options& opt) {
    require_exact(opt, "region-classify");
    Graph g = jio::parse_graph(field(input, "graph"), "graph");
    auto x = jio::parse_rational_map(field(input, "x"), "x");
    auto result = gpatoms::classify_boundary_point(g, x);
    if (opt.output == "json") {
        print_json(jio::to_json(result));
    } else {
        std::cout << "on_boundary: " << (result.on_boundary ? "true" : "false") << "\n";
        if (result.on_boundary)
            std::cout << "gradient_vanishes: " << (result.gradient_vanishes ? "true" : "false")
                      << "\n";
        if (result.witness_split)
            std::cout << "witness split: {" << join_names(result.witness_split->first) << "} + {"
                      << join_names(result.witness_split->second) << "}\n";
    }
}

json coefficient_to_json(const Rational& c) {
    // Counting-series coefficients are nonnegative integers; keep them as JSON
    // numbers while they fit and fall back to decimal strings beyond 64 bits.
    mpz_class num = c.get_num();
    if (num.fits_ulong_p()) return json(num.get_ui());
    return json(num.get_str());
}

void run_words_count(const json& input, const Options& opt, std::size_t max_len) {
    require_exact(opt, "words-count");
    Graph g = jio::parse_graph(field(input, "graph"), "graph");
    auto series = gpatoms::words::count_reduced_classes_series(g, max_len);
    if (opt.output == "json") {
        json counts = json::array();
        for (std::size_t l = 0; l <= max_len; ++l)
            counts.push_back(coefficient_to_json(series.coefficient(l)));
        print_json(json{{"max_len", max_len}, {"counts", counts}});
    } else {
        std::cout << "len count\n";
        for (std::size_t l = 0; l <= max_len; ++l) {
            Rational c = series.coefficient(l);
            std::cout << l << " " << gpatoms::rational_to_string(c) << "\n";
        }
    }
}

void run_words_enumerate(const json& input, const Options& opt, std::size_t length) {
    require_exact(opt, "words-enumerate");
    Graph g = jio::parse_graph(field(input, "graph"), "graph");
    auto classes = gpatoms::words::enumerate_reduced_classes(g, length, opt.cap);
    if (opt.output == "json") {
        json list = json::array();
        for (const auto& word : classes) list.push_back(word);
        print_json(json{{"length", length}, {"count", classes.size()}, {"classes", list}});
    } else {
        for (const auto& word : classes) std::cout << join_names(word) << "\n";
    }
}

void run_words_verify(const json& input, const Options& opt, std::size_t max_len) {
    require_exact(opt, "words-verify");
    Graph g = jio::parse_graph(field(input, "graph"), "graph");
    std::size_t cap = opt.cap_given ? opt.cap : 4 * gpatoms::kDefaultCap;
    auto report = gpatoms::words::cartier_foata_identity_check(g, max_len, cap);
    bool pass = report.reduced_identity && report.unreduced_identity;
    if (opt.output == "json") {
        json reduced = json::array();
        for (const auto& c : report.reduced_counts) reduced.push_back(coefficient_to_json(c));
        json all = json::array();
        for (const auto& c : report.all_class_counts) all.push_back(coefficient_to_json(c));
        print_json(json{{"max_len", max_len},
                        {"reduced_identity", report.reduced_identity},
                        {"unreduced_identity", report.unreduced_identity},
                        {"reduced_counts", reduced},
                        {"all_class_counts", all},
                        {"pass", pass}});
    } else {
        std::cout << "reduced identity: " << (report.reduced_identity ? "pass" : "FAIL") << "\n"
                  << "unreduced identity: " << (report.unreduced_identity ? "pass" : "FAIL")
                  << "\n";
    }
    if (!pass) throw gpatoms::domain_error("words-verify: identity check failed");
}

void run_poly(const json& input, const Options& opt) {
    require_exact(opt, "poly");
    Graph g = jio::parse_graph(field(input, "graph"), "graph");
    std::string rendered = render_clique_polynomial(g);
    if (opt.output == "json") {
        json cliques = json::array();
        for (std::uint64_t mask : g.clique_masks()) cliques.push_back(g.mask_to_clique(mask));
        print_json(json{{"polynomial", rendered}, {"cliques", cliques}});
    } else {
        std::cout << rendered << "\n";
    }
}

void run_join(const json& input, const Options& opt) {
    require_exact(opt, "join");
    Graph g = jio::parse_graph(field(input, "graph"), "graph");
    auto factors = g.join_decomposition();
    if (opt.output == "json") {
        json list = json::array();
        for (const auto& factor : factors) list.push_back(jio::graph_to_json(factor));
        print_json(json{{"factors", list}, {"join_irreducible", factors.size() == 1}});
    } else {
        for (const auto& factor : factors) std::cout << "{" << join_names(factor.vertices()) << "}\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gpatoms: atoms of graph products of von Neumann algebras"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--mode", opt.mode, "arithmetic mode")
        ->check(CLI::IsMember({"exact", "float"}))
        ->capture_default_str();
    app.add_option("--eps", opt.eps, "float-mode tolerance (must be > 0)")->capture_default_str();
    auto* cap_opt =
        app.add_option("--cap", opt.cap, "enumeration cap (selections / word classes)")
            ->capture_default_str();
    app.add_option("--precision", opt.precision_text,
                   "root isolation width as a rational (default 1/2^40)");
    app.add_option("--output", opt.output, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();

    std::string input_path;
    std::size_t max_len = 0;
    std::size_t length = 0;

    auto add_input = [&](CLI::App* cmd) {
        cmd->fallthrough();  // let global flags appear after the subcommand
        cmd->add_option("input", input_path, "input JSON file ('-' for stdin)")->required();
    };

    auto* cmd_atoms = app.add_subcommand("atoms", "enumerate type I factor summands");
    add_input(cmd_atoms);
    auto* cmd_meet = app.add_subcommand("meet", "meet of one projection per vertex");
    add_input(cmd_meet);
    auto* cmd_region_check = app.add_subcommand("region-check", "convergence region membership");
    add_input(cmd_region_check);
    auto* cmd_region_rho = app.add_subcommand("region-rho", "boundary radius along a ray");
    add_input(cmd_region_rho);
    auto* cmd_region_classify =
        app.add_subcommand("region-classify", "classify a boundary point");
    add_input(cmd_region_classify);
    auto* cmd_words_count = app.add_subcommand("words-count", "count reduced word classes");
    add_input(cmd_words_count);
    cmd_words_count->add_option("--max-len", max_len, "series truncation order")->required();
    auto* cmd_words_enumerate =
        app.add_subcommand("words-enumerate", "list reduced classes of one length");
    add_input(cmd_words_enumerate);
    cmd_words_enumerate->add_option("--len", length, "word length")->required();
    auto* cmd_words_verify =
        app.add_subcommand("words-verify", "check the normal-form series identities");
    add_input(cmd_words_verify);
    cmd_words_verify->add_option("--max-len", max_len, "verification order")->required();
    auto* cmd_poly = app.add_subcommand("poly", "render the clique polynomial");
    add_input(cmd_poly);
    auto* cmd_join = app.add_subcommand("join", "join decomposition of the graph");
    add_input(cmd_join);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    opt.cap_given = cap_opt->count() > 0;
    if (!opt.exact() && opt.eps <= 0) {
        std::cerr << "error: --eps must be positive in float mode\n";
        return 1;
    }

    try {
        json input = load_input(input_path);
        if (cmd_atoms->parsed()) run_atoms(input, opt);
        else if (cmd_meet->parsed()) run_meet(input, opt);
        else if (cmd_region_check->parsed()) run_region_check(input, opt);
        else if (cmd_region_rho->parsed()) run_region_rho(input, opt);
        else if (cmd_region_classify->parsed()) run_region_classify(input, opt);
        else if (cmd_words_count->parsed()) run_words_count(input, opt, max_len);
        else if (cmd_words_enumerate->parsed()) run_words_enumerate(input, opt, length);
        else if (cmd_words_verify->parsed()) run_words_verify(input, opt, max_len);
        else if (cmd_poly->parsed()) run_poly(input, opt);
        else if (cmd_join->parsed()) run_join(input, opt);
    } catch (const gpatoms::cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const gpatoms::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
