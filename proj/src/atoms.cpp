#include "gpatoms/atoms.hpp"

#include <algorithm>
#include <bit>

#include "gpatoms/clique_poly.hpp"
#include "gpatoms/region.hpp"
#include "gpatoms/words.hpp"

namespace gpatoms::atoms {

namespace {

template <typename AlgebraMapT>
void check_vertex_coverage(const Graph& g, const AlgebraMapT& algebras) {
    for (const auto& [v, spec] : algebras) {
        (void)spec;
        if (!g.has_vertex(v)) throw domain_error("algebra given for unknown vertex '" + v + "'");
    }
    for (const auto& v : g.vertices())
        if (!algebras.count(v)) throw domain_error("missing algebra for vertex '" + v + "'");
}

}  // namespace

void validate_algebras(const Graph& g, const AlgebraMap& algebras) {
    check_vertex_coverage(g, algebras);
    for (const auto& [v, spec] : algebras) {
        if (spec.summands.empty() && !spec.has_diffuse_part)
            throw domain_error("vertex '" + v + "' has neither summands nor a diffuse part");
        Rational total(0);
        for (std::size_t k = 0; k < spec.summands.size(); ++k) {
            const Summand& s = spec.summands[k];
            std::string where = "vertex '" + v + "' summand " + std::to_string(k);
            if (sgn(s.weight) <= 0 || s.weight > 1)
                throw domain_error(where + ": weight must lie in (0,1]");
            total += s.weight;
            if (s.infinite) {
                if (!s.eigenvalues.empty())
                    throw domain_error(where + ": infinite summands carry no eigenvalues");
                continue;
            }
            if (s.eigenvalues.empty())
                throw domain_error(where + ": finite summands need at least one eigenvalue");
            Rational lambda_sum(0);
            for (const auto& lambda : s.eigenvalues) {
                if (sgn(lambda) <= 0) throw domain_error(where + ": eigenvalues must be positive");
                lambda_sum += lambda;
            }
            if (lambda_sum != 1) throw domain_error(where + ": eigenvalues must sum to 1");
        }
        if (total > 1) throw domain_error("vertex '" + v + "': summand weights exceed 1");
        if ((total == 1) == spec.has_diffuse_part)
            throw domain_error("vertex '" + v +
                               "': weights must sum to 1 exactly when there is no diffuse part");
    }
}

void validate_algebras_float(const Graph& g, const AlgebraMapFloat& algebras, double eps) {
    check_vertex_coverage(g, algebras);
    for (const auto& [v, spec] : algebras) {
        if (spec.summands.empty() && !spec.has_diffuse_part)
            throw domain_error("vertex '" + v + "' has neither summands nor a diffuse part");
        double total = 0.0;
        for (std::size_t k = 0; k < spec.summands.size(); ++k) {
            const SummandFloat& s = spec.summands[k];
            std::string where = "vertex '" + v + "' summand " + std::to_string(k);
            if (!(s.weight > 0.0) || s.weight > 1.0 + eps)
                throw domain_error(where + ": weight must lie in (0,1]");
            total += s.weight;
            if (s.infinite) {
                if (!s.eigenvalues.empty())
                    throw domain_error(where + ": infinite summands carry no eigenvalues");
                continue;
            }
            if (s.eigenvalues.empty())
                throw domain_error(where + ": finite summands need at least one eigenvalue");
            double lambda_sum = 0.0;
            for (double lambda : s.eigenvalues)
                if (!(lambda > 0.0)) throw domain_error(where + ": eigenvalues must be positive");
            for (double lambda : s.eigenvalues) lambda_sum += lambda;
            if (std::abs(lambda_sum - 1.0) > eps)
                throw domain_error(where + ": eigenvalues must sum to 1");
        }
        if (total > 1.0 + eps) throw domain_error("vertex '" + v + "': summand weights exceed 1");
        if (!spec.has_diffuse_part && std::abs(total - 1.0) > eps)
            throw domain_error("vertex '" + v +
                               "': weights must sum to 1 exactly when there is no diffuse part");
    }
}

Rational s_value(const Summand& summand) {
    if (summand.infinite) throw domain_error("s_value is undefined for infinite summands");
    Rational s(0);
    for (const auto& lambda : summand.eigenvalues) s += Rational(1) / (summand.weight * lambda);
    return s;
}

MeetReport projection_meet(const Graph& g, const std::map<std::string, Rational>& p) {
    if (p.size() != g.size()) throw domain_error("projections must cover every vertex exactly once");
    std::map<std::string, Rational> x;
    for (const auto& [v, value] : p) {
        g.index_of(v);
        if (sgn(value) <= 0 || value > 1)
            throw domain_error("projection trace at '" + v + "' must lie in (0,1]");
        x.emplace(v, 1 - value);
    }
    MeetReport out;
    out.nonzero = region_membership(g, x);
    out.value = out.nonzero ? CliquePolynomial(g).evaluate(x) : Rational(0);
    return out;
}

MeetReportFloat projection_meet_float(const Graph& g, const std::map<std::string, double>& p,
                                      double eps) {
    if (p.size() != g.size()) throw domain_error("projections must cover every vertex exactly once");
    std::map<std::string, double> x;
    for (const auto& [v, value] : p) {
        g.index_of(v);
        if (!(value > 0.0) || value > 1.0 + eps)
            throw domain_error("projection trace at '" + v + "' must lie in (0,1]");
        x.emplace(v, 1.0 - value);
    }
    MeetReportFloat out;
    out.nonzero = region_membership_float(g, x, eps);
    out.value = out.nonzero ? CliquePolynomial(g).evaluate(x) : 0.0;
    return out;
}

namespace {

template <typename AlgebraMapT>
const auto& selected_summand(const Graph& g, const AlgebraMapT& algebras,
                             const SummandSelection& selection, const std::string& v) {
    auto spec = algebras.find(v);
    if (spec == algebras.end()) throw domain_error("missing algebra for vertex '" + v + "'");
    auto pick = selection.find(v);
    if (pick == selection.end()) throw domain_error("selection missing vertex '" + v + "'");
    if (pick->second >= spec->second.summands.size())
        throw domain_error("selection index out of range at vertex '" + v + "'");
    return spec->second.summands[pick->second];
}

// Shared six-step classification.  Scalar is Rational or double; `member`
// decides region membership of the finite-part point, `is_one` tests s == 1.
template <typename ReportT, typename Scalar, typename AlgebraMapT, typename Member>
std::optional<ReportT> classify_impl(const Graph& g, const AlgebraMapT& algebras,
                                     const SummandSelection& selection, Member&& member) {
    if (selection.size() != g.size())
        throw domain_error("selection must cover every vertex exactly once");
    ReportT report;
    report.selection = selection;

    // (i) infinite-part vertices must be adjacent to every other vertex
    std::vector<std::string> finite_vertices;
    for (const auto& v : g.vertices()) {
        if (selected_summand(g, algebras, selection, v).infinite)
            report.infinite_part.push_back(v);
        else
            finite_vertices.push_back(v);
    }
    for (const auto& v : report.infinite_part)
        for (const auto& u : g.vertices())
            if (u != v && !g.adjacent(u, v)) return std::nullopt;

    // (ii) the vertices with n(v) > 1 must form a clique of the finite part
    Graph finite_graph = g.induced_subgraph(finite_vertices);
    std::map<std::string, Scalar> s;
    for (const auto& v : finite_vertices) {
        const auto& summand = selected_summand(g, algebras, selection, v);
        Scalar value(0);
        for (const auto& lambda : summand.eigenvalues)
            value += Scalar(1) / (Scalar(summand.weight) * Scalar(lambda));
        s.emplace(v, value);
        if (summand.eigenvalues.size() > 1) {
            report.support_clique.push_back(v);
            report.dimensions.emplace(v, summand.eigenvalues.size());
        } else {
            report.dimensions.emplace(v, 1);
        }
    }
    for (std::size_t a = 0; a < report.support_clique.size(); ++a)
        for (std::size_t b = a + 1; b < report.support_clique.size(); ++b)
            if (!finite_graph.adjacent(report.support_clique[a], report.support_clique[b]))
                return std::nullopt;

    // (iii) membership of x = (1 - 1/s) in the region of the finite part
    std::map<std::string, Scalar> x;
    for (const auto& [v, value] : s) x.emplace(v, Scalar(1) - Scalar(1) / value);
    if (!member(finite_graph, x)) return std::nullopt;

    // (iv) finite-part weight: prod alpha * sum over cliques of
    //      prod_{v not in K'} s_v * prod_{v in K'} (1 - s_v)
    CliquePolynomial finite_poly(finite_graph);
    std::vector<Scalar> s_values(finite_graph.size(), Scalar(0));
    for (const auto& [v, value] : s) s_values[finite_graph.index_of(v)] = value;
    Scalar clique_sum(0);
    for (std::uint64_t mask : finite_poly.clique_masks()) {
        Scalar term(1);
        for (std::size_t i = 0; i < finite_graph.size(); ++i)
            term *= ((mask >> i) & 1) ? (Scalar(1) - s_values[i]) : s_values[i];
        clique_sum += term;
    }
    Scalar alpha_finite(1);
    for (const auto& v : finite_vertices)
        alpha_finite *= Scalar(selected_summand(g, algebras, selection, v).weight);
    report.finite_part_weight = alpha_finite * clique_sum;

    Scalar alpha_infinite(1);
    for (const auto& v : report.infinite_part)
        alpha_infinite *= Scalar(selected_summand(g, algebras, selection, v).weight);
    report.weight = report.finite_part_weight * alpha_infinite;
    report.weight_derived = !report.infinite_part.empty();

    // (v)+(vi) minimal projection weights (independent route: prod t * prod s
    // * K(x)) and density eigenvalues, row-major over the support clique
    Scalar k_value = finite_poly.evaluate(x);
    Scalar s_product(1);
    for (const auto& [v, value] : s) s_product *= value;
    Scalar t_base(1);
    for (const auto& v : finite_vertices) {
        const auto& summand = selected_summand(g, algebras, selection, v);
        if (summand.eigenvalues.size() == 1)
            t_base *= Scalar(summand.weight) * Scalar(summand.eigenvalues[0]);
    }
    std::vector<std::size_t> dims;
    for (const auto& v : report.support_clique)
        dims.push_back(selected_summand(g, algebras, selection, v).eigenvalues.size());
    std::vector<std::size_t> index(dims.size(), 0);
    while (true) {
        Scalar eigen_product(1);
        Scalar t_product = t_base;
        for (std::size_t k = 0; k < dims.size(); ++k) {
            const auto& summand = selected_summand(g, algebras, selection, report.support_clique[k]);
            eigen_product *= Scalar(summand.eigenvalues[index[k]]);
            t_product *= Scalar(summand.weight) * Scalar(summand.eigenvalues[index[k]]);
        }
        report.density_eigenvalues.push_back(eigen_product);
        report.minimal_projection_weights.emplace_back(index, t_product * s_product * k_value);
        std::size_t pos = dims.size();
        while (pos > 0 && ++index[pos - 1] == dims[pos - 1]) index[--pos] = 0;
        if (pos == 0) break;
    }
    return report;
}

bool exact_member(const Graph& g, const std::map<std::string, Rational>& x) {
    return region_membership(g, x);
}

}  // namespace

std::optional<AtomReport> classify_selection(const Graph& g, const AlgebraMap& algebras,
                                             const SummandSelection& selection) {
    validate_algebras(g, algebras);
    return classify_impl<AtomReport, Rational>(g, algebras, selection, exact_member);
}

std::optional<AtomReportFloat> classify_selection_float(const Graph& g,
                                                        const AlgebraMapFloat& algebras,
                                                        const SummandSelection& selection,
                                                        double eps) {
    validate_algebras_float(g, algebras, eps);
    return classify_impl<AtomReportFloat, double>(
        g, algebras, selection,
        [eps](const Graph& h, const std::map<std::string, double>& x) {
            return region_membership_float(h, x, eps);
        });
}

namespace {

template <typename Enumeration, typename ReportT, typename Scalar, typename AlgebraMapT,
          typename Classify>
Enumeration enumerate_impl(const Graph& g, const AlgebraMapT& algebras, std::size_t cap,
                           Classify&& classify) {
    Enumeration out;
    out.total_mass = Scalar(0);
    unsigned __int128 combinations = 1;
    for (const auto& v : g.vertices()) {
        combinations *= algebras.at(v).summands.size();
        if (combinations > cap)
            throw cap_exceeded("selection space exceeds cap " + std::to_string(cap));
    }
    if (combinations == 0) return out;
    SummandSelection selection;
    for (const auto& v : g.vertices()) selection[v] = 0;
    while (true) {
        ++out.selections_examined;
        if (auto report = classify(selection)) {
            out.total_mass += report->weight;
            out.atoms.push_back(std::move(*report));
        }
        // odometer over declared vertex order, last vertex fastest
        std::size_t pos = g.size();
        while (pos > 0) {
            const auto& v = g.vertices()[pos - 1];
            if (++selection[v] < algebras.at(v).summands.size()) break;
            selection[v] = 0;
            --pos;
        }
        if (pos == 0) break;
    }
    return out;
}

}  // namespace

AtomEnumeration enumerate_atoms(const Graph& g, const AlgebraMap& algebras, std::size_t cap) {
    validate_algebras(g, algebras);
    return enumerate_impl<AtomEnumeration, AtomReport, Rational>(
        g, algebras, cap, [&](const SummandSelection& sel) {
            return classify_impl<AtomReport, Rational>(g, algebras, sel, exact_member);
        });
}

AtomEnumerationFloat enumerate_atoms_float(const Graph& g, const AlgebraMapFloat& algebras,
                                           double eps, std::size_t cap) {
    validate_algebras_float(g, algebras, eps);
    return enumerate_impl<AtomEnumerationFloat, AtomReportFloat, double>(
        g, algebras, cap, [&](const SummandSelection& sel) {
            return classify_impl<AtomReportFloat, double>(
                g, algebras, sel, [eps](const Graph& h, const std::map<std::string, double>& x) {
                    return region_membership_float(h, x, eps);
                });
        });
}

CrosscheckResult truncated_series_crosscheck(const Graph& g, const AlgebraMap& algebras,
                                             const SummandSelection& selection, std::size_t max_len,
                                             std::size_t cap) {
    validate_algebras(g, algebras);
    if (selection.size() != g.size())
        throw domain_error("selection must cover every vertex exactly once");
    std::vector<std::string> finite_vertices;
    for (const auto& v : g.vertices())
        if (!selected_summand(g, algebras, selection, v).infinite) finite_vertices.push_back(v);
    Graph finite_graph = g.induced_subgraph(finite_vertices);
    std::map<std::string, Rational> shifted;  // x_v = s_v - 1, the word letter weights
    std::map<std::string, Rational> region_point;
    for (const auto& v : finite_vertices) {
        Rational s = s_value(selected_summand(g, algebras, selection, v));
        shifted.emplace(v, s - 1);
        region_point.emplace(v, 1 - Rational(1) / s);
    }
    CrosscheckResult out{words::truncated_weighted_sum(finite_graph, shifted, max_len, cap),
                         Rational(0)};
    Rational k_value = CliquePolynomial(finite_graph).evaluate(region_point);
    if (sgn(k_value) == 0)
        throw domain_error("closed form undefined: clique polynomial vanishes at (1 - 1/s)");
    out.closed_form = Rational(1) / k_value;
    return out;
}

}  // namespace gpatoms::atoms
