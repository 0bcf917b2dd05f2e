#include "gpatoms/clique_poly.hpp"

#include <bit>

namespace gpatoms {

namespace {

template <typename Scalar>
std::vector<Scalar> values_from_map(const Graph& g, const std::map<std::string, Scalar>& x) {
    if (x.size() != g.size()) throw domain_error("assignment must cover every vertex exactly once");
    std::vector<Scalar> out(g.size());
    for (const auto& [v, value] : x) out[g.index_of(v)] = value;
    return out;
}

template <typename Scalar>
Scalar evaluate_masked(const std::vector<std::uint64_t>& masks, const std::vector<Scalar>& x,
                       std::uint64_t support) {
    Scalar total(0);
    for (std::uint64_t m : masks) {
        if ((m & support) != m) continue;
        Scalar term(1);
        std::uint64_t rest = m;
        while (rest) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            term *= x[i];
        }
        if (std::popcount(m) % 2 == 1) term = -term;
        total += term;
    }
    return total;
}

}  // namespace

CliquePolynomial::CliquePolynomial(Graph g) : graph_(std::move(g)), masks_(graph_.clique_masks()) {}

std::vector<Rational> CliquePolynomial::to_values(const std::map<std::string, Rational>& x) const {
    return values_from_map(graph_, x);
}

std::vector<double> CliquePolynomial::to_values(const std::map<std::string, double>& x) const {
    return values_from_map(graph_, x);
}

Rational CliquePolynomial::evaluate_values(const std::vector<Rational>& x) const {
    return evaluate_masked(masks_, x, ~std::uint64_t(0));
}

double CliquePolynomial::evaluate_values(const std::vector<double>& x) const {
    return evaluate_masked(masks_, x, ~std::uint64_t(0));
}

Rational CliquePolynomial::evaluate_on_mask(const std::vector<Rational>& x, std::uint64_t support) const {
    return evaluate_masked(masks_, x, support);
}

Rational CliquePolynomial::evaluate(const std::map<std::string, Rational>& x) const {
    return evaluate_values(to_values(x));
}

double CliquePolynomial::evaluate(const std::map<std::string, double>& x) const {
    return evaluate_values(to_values(x));
}

template <typename Scalar>
static Scalar partial_impl(const std::vector<std::uint64_t>& masks, std::size_t j,
                           const std::vector<Scalar>& x) {
    // d/dx_j K_G(x): cliques containing j, with x_j struck out.  This equals
    // -K_{S(j)}(x|_{S(j)}) because K union {j} is a clique exactly when K is a
    // clique inside the neighborhood of j.
    Scalar total(0);
    std::uint64_t jbit = std::uint64_t(1) << j;
    for (std::uint64_t m : masks) {
        if (!(m & jbit)) continue;
        Scalar term(1);
        std::uint64_t rest = m & ~jbit;
        while (rest) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            term *= x[i];
        }
        if (std::popcount(m) % 2 == 1) term = -term;
        total += term;
    }
    return total;
}

Rational CliquePolynomial::partial_derivative(const std::string& j,
                                              const std::map<std::string, Rational>& x) const {
    return partial_impl(masks_, graph_.index_of(j), to_values(x));
}

double CliquePolynomial::partial_derivative(const std::string& j,
                                            const std::map<std::string, double>& x) const {
    return partial_impl(masks_, graph_.index_of(j), to_values(x));
}

UnivariatePolynomial CliquePolynomial::ray_polynomial_values(const std::vector<Rational>& x) const {
    std::size_t top = 0;
    for (std::uint64_t m : masks_) top = std::max<std::size_t>(top, std::popcount(m));
    std::vector<Rational> coeffs(top + 1, Rational(0));
    for (std::uint64_t m : masks_) {
        Rational term(1);
        std::uint64_t rest = m;
        while (rest) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            term *= x[i];
        }
        int d = std::popcount(m);
        if (d % 2 == 1) term = -term;
        coeffs[d] += term;
    }
    return UnivariatePolynomial(std::move(coeffs));
}

UnivariatePolynomial CliquePolynomial::ray_polynomial(const std::map<std::string, Rational>& x) const {
    return ray_polynomial_values(to_values(x));
}

std::pair<Graph, std::map<std::string, Rational>> restrict_zeros(
    const Graph& g, const std::map<std::string, Rational>& x) {
    if (x.size() != g.size()) throw domain_error("assignment must cover every vertex exactly once");
    std::vector<std::string> keep;
    std::map<std::string, Rational> restricted;
    for (const auto& v : g.vertices()) {
        const Rational& value = x.at(v);
        if (sgn(value) != 0) {
            keep.push_back(v);
            restricted.emplace(v, value);
        }
    }
    return {g.induced_subgraph(keep), std::move(restricted)};
}

JoinFactorizationCheck join_factorization_check(const Graph& g,
                                                const std::map<std::string, Rational>& x) {
    CliquePolynomial full(g);
    JoinFactorizationCheck out{full.evaluate(x), {}, false};
    Rational product(1);
    for (const Graph& factor : g.join_decomposition()) {
        std::map<std::string, Rational> part;
        for (const auto& v : factor.vertices()) part.emplace(v, x.at(v));
        Rational value = CliquePolynomial(factor).evaluate(part);
        product *= value;
        out.factor_values.push_back(std::move(value));
    }
    out.product_matches = (product == out.full_value);
    return out;
}

}  // namespace gpatoms
