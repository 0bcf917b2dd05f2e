#pragma once

#include <map>
#include <string>
#include <vector>

#include "gpatoms/graph.hpp"
#include "gpatoms/polynomial.hpp"
#include "gpatoms/rational.hpp"

namespace gpatoms {

// The multilinear clique polynomial K_G(x) = sum over all cliques (empty one
// included) of (-1)^|K| prod_{v in K} x_v, kept in clique-list form and
// evaluated on demand.  Affine in each variable; K_G(0) = 1.
class CliquePolynomial {
public:
    explicit CliquePolynomial(Graph g);

    const Graph& graph() const { return graph_; }
    const std::vector<std::uint64_t>& clique_masks() const { return masks_; }

    Rational evaluate(const std::map<std::string, Rational>& x) const;
    double evaluate(const std::map<std::string, double>& x) const;
    Rational evaluate_values(const std::vector<Rational>& x) const;
    double evaluate_values(const std::vector<double>& x) const;
    // evaluation restricted to cliques inside `support` (i.e. x zeroed elsewhere)
    Rational evaluate_on_mask(const std::vector<Rational>& x, std::uint64_t support) const;

    // partial derivative d/dx_j: constant in x_j, equals -K_{S(j)}(x|_{S(j)})
    // where S(j) is the induced subgraph on the neighbors of j
    Rational partial_derivative(const std::string& j, const std::map<std::string, Rational>& x) const;
    double partial_derivative(const std::string& j, const std::map<std::string, double>& x) const;

    // univariate r -> K_G(r * x) with coefficients grouped by clique size
    UnivariatePolynomial ray_polynomial(const std::map<std::string, Rational>& x) const;
    UnivariatePolynomial ray_polynomial_values(const std::vector<Rational>& x) const;

    std::vector<Rational> to_values(const std::map<std::string, Rational>& x) const;
    std::vector<double> to_values(const std::map<std::string, double>& x) const;

private:
    Graph graph_;
    std::vector<std::uint64_t> masks_;
};

// Drops the vertices where x vanishes; K on the restricted graph agrees with
// K_G at x.  Returns the induced graph and the restricted assignment.
std::pair<Graph, std::map<std::string, Rational>> restrict_zeros(
    const Graph& g, const std::map<std::string, Rational>& x);

// For a join decomposition G = G_1 + ... + G_m, K_G(x) = prod_j K_{G_j}(x|_j).
struct JoinFactorizationCheck {
    Rational full_value;
    std::vector<Rational> factor_values;
    bool product_matches;
};
JoinFactorizationCheck join_factorization_check(const Graph& g,
                                                const std::map<std::string, Rational>& x);

}  // namespace gpatoms
