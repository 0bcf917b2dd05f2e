#pragma once

#include <optional>
#include <vector>

#include "gpatoms/rational.hpp"

namespace gpatoms {

// Dense univariate polynomial over the rationals, coefficients ascending,
// never a trailing zero coefficient (the zero polynomial has no coefficients).
class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;
    explicit UnivariatePolynomial(std::vector<Rational> ascending_coeffs);

    static UnivariatePolynomial constant(const Rational& c);

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    const Rational& coefficient(std::size_t k) const;

    Rational evaluate(const Rational& t) const;
    double evaluate(double t) const;
    UnivariatePolynomial derivative() const;

    UnivariatePolynomial operator+(const UnivariatePolynomial& other) const;
    UnivariatePolynomial operator-(const UnivariatePolynomial& other) const;
    UnivariatePolynomial operator*(const UnivariatePolynomial& other) const;
    UnivariatePolynomial operator*(const Rational& scalar) const;
    UnivariatePolynomial operator-() const;
    bool operator==(const UnivariatePolynomial& other) const { return coeffs_ == other.coeffs_; }

    // Euclidean division: *this = q * divisor + r with deg r < deg divisor.
    std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& divisor) const;

private:
    std::vector<Rational> coeffs_;
};

// Sturm chain of p (p, p', then negated remainders).  p must be nonzero.
std::vector<UnivariatePolynomial> sturm_chain(const UnivariatePolynomial& p);

// Sign variations of the chain evaluated at t, zeros dropped.
int sign_variations_at(const std::vector<UnivariatePolynomial>& chain, const Rational& t);

// Number of distinct real roots of p in the half-open interval (a, b].
// Exact; works whether or not a or b is itself a root.
int count_roots_half_open(const UnivariatePolynomial& p, const Rational& a, const Rational& b);

// [lo, hi] containing the smallest root of p in (0, upper], with hi - lo <= precision
// and p of constant nonzero sign on (0, lo].  std::nullopt when there is no such root.
// p == 0 is a domain error.
struct IsolationInterval {
    Rational lo;
    Rational hi;
};
std::optional<IsolationInterval> smallest_positive_root(const UnivariatePolynomial& p,
                                                        const Rational& upper,
                                                        const Rational& precision);

}  // namespace gpatoms
