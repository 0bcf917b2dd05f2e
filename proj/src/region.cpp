#include "gpatoms/region.hpp"

#include <bit>

namespace gpatoms {

Rational default_root_precision() {
    Rational p(1);
    mpq_div_2exp(p.get_mpq_t(), p.get_mpq_t(), 40);
    return p;
}

namespace {

void check_unit_box(const std::vector<Rational>& x) {
    for (const auto& value : x)
        if (sgn(value) < 0 || value > 1) throw domain_error("membership needs x in [0,1]^V");
}

void check_nonnegative(const std::vector<Rational>& x) {
    for (const auto& value : x)
        if (sgn(value) < 0) throw domain_error("coordinates must be nonnegative");
}

}  // namespace

bool region_membership(const Graph& g, const std::map<std::string, Rational>& x) {
    CliquePolynomial poly(g);
    auto values = poly.to_values(x);
    check_unit_box(values);
    UnivariatePolynomial ray = poly.ray_polynomial_values(values);
    // ray(0) = 1 > 0, so membership is exactly "no root in (0, 1]"
    return count_roots_half_open(ray, Rational(0), Rational(1)) == 0;
}

bool region_membership_corner_oracle(const Graph& g, const std::map<std::string, Rational>& x) {
    CliquePolynomial poly(g);
    auto values = poly.to_values(x);
    check_unit_box(values);
    std::uint64_t corners = std::uint64_t(1) << g.size();
    for (std::uint64_t corner = 0; corner < corners; ++corner)
        if (sgn(poly.evaluate_on_mask(values, corner)) <= 0) return false;
    return true;
}

bool region_membership_float(const Graph& g, const std::map<std::string, double>& x, double eps) {
    CliquePolynomial poly(g);
    auto values = poly.to_values(x);
    for (double value : values)
        if (value < -eps || value > 1.0 + eps) throw domain_error("membership needs x in [0,1]^V");
    std::uint64_t corners = std::uint64_t(1) << g.size();
    for (std::uint64_t corner = 0; corner < corners; ++corner) {
        double total = 0.0;
        for (std::uint64_t m : poly.clique_masks()) {
            if ((m & corner) != m) continue;
            double term = 1.0;
            std::uint64_t rest = m;
            while (rest) {
                int i = std::countr_zero(rest);
                rest &= rest - 1;
                term *= values[i];
            }
            total += std::popcount(m) % 2 == 1 ? -term : term;
        }
        if (total <= eps) return false;
    }
    return true;
}

RhoResult rho(const Graph& g, const std::map<std::string, Rational>& u, const Rational& precision) {
    CliquePolynomial poly(g);
    auto values = poly.to_values(u);
    check_nonnegative(values);
    Rational top(0);
    for (const auto& value : values) top = std::max(top, value);
    if (sgn(top) == 0) throw domain_error("rho needs a nonzero direction");
    Rational cap = Rational(1) / top;  // where the largest coordinate of r*u reaches 1
    UnivariatePolynomial ray = poly.ray_polynomial_values(values);
    auto found = smallest_positive_root(ray, cap, precision);
    if (!found) return {IsolationInterval{cap, cap}, true};
    // the smallest root sits in (lo, hi]; it is the cap itself exactly when the
    // cap is a root and the only one in (lo, cap]
    bool at_cap = sgn(ray.evaluate(cap)) == 0 &&
                  count_roots_half_open(ray, found->lo, cap) == 1;
    return {*found, at_cap};
}

BoundaryClassification classify_boundary_point(const Graph& g,
                                               const std::map<std::string, Rational>& x) {
    CliquePolynomial poly(g);
    auto values = poly.to_values(x);
    check_nonnegative(values);
    BoundaryClassification out;
    if (sgn(poly.evaluate_values(values)) != 0) return out;
    out.on_boundary = true;

    // Work on the positive support; K and its relevant partials agree there.
    auto [support_graph, support_x] = restrict_zeros(g, x);
    CliquePolynomial support_poly(support_graph);
    auto support_values = support_poly.to_values(support_x);
    bool all_zero = true;
    for (const auto& v : support_graph.vertices()) {
        if (sgn(support_poly.partial_derivative(v, support_x)) != 0) {
            all_zero = false;
            break;
        }
    }
    out.gradient_vanishes = all_zero;
    if (!all_zero) return out;

    // The gradient vanishes exactly when >= 2 join factors of G+ evaluate to
    // zero; group one vanishing factor against the rest and verify both sides.
    auto factors = support_graph.join_decomposition();
    std::vector<std::string> side_a;
    std::vector<std::string> side_b;
    for (const Graph& factor : factors) {
        std::map<std::string, Rational> part;
        for (const auto& v : factor.vertices()) part.emplace(v, support_x.at(v));
        bool vanishes = sgn(CliquePolynomial(factor).evaluate(part)) == 0;
        auto& side = (side_a.empty() && vanishes) ? side_a : side_b;
        for (const auto& v : factor.vertices()) side.push_back(v);
    }
    if (!side_a.empty() && !side_b.empty()) {
        std::map<std::string, Rational> part_b;
        for (const auto& v : side_b) part_b.emplace(v, support_x.at(v));
        Graph gb = support_graph.induced_subgraph(side_b);
        if (sgn(CliquePolynomial(gb).evaluate(part_b)) == 0)
            out.witness_split = std::make_pair(std::move(side_a), std::move(side_b));
    }
    return out;
}

}  // namespace gpatoms
