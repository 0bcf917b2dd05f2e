#pragma once

#include <vector>

#include "gpatoms/polynomial.hpp"
#include "gpatoms/rational.hpp"

namespace gpatoms {

// Power series over Q truncated at a fixed order: coefficients c_0 .. c_L.
// Every operation is exact through the stored order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<Rational> coeffs);
    static TruncatedSeries zero(std::size_t order);
    static TruncatedSeries one(std::size_t order);
    static TruncatedSeries from_polynomial(const UnivariatePolynomial& p, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& coefficient(std::size_t k) const { return coeffs_.at(k); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    TruncatedSeries operator+(const TruncatedSeries& other) const;
    TruncatedSeries operator-(const TruncatedSeries& other) const;
    TruncatedSeries operator*(const TruncatedSeries& other) const;
    bool operator==(const TruncatedSeries& other) const { return coeffs_ == other.coeffs_; }

    // 1/s; requires a nonzero constant term.
    TruncatedSeries reciprocal() const;

    // s(t/(1+t)) and s(t/(1-t)); mutually inverse substitutions.
    TruncatedSeries substitute_t_over_one_plus_t() const;
    TruncatedSeries substitute_t_over_one_minus_t() const;

private:
    // Composition with g of zero constant term, given as its truncated coefficients.
    TruncatedSeries compose_with(const TruncatedSeries& g) const;

    std::vector<Rational> coeffs_;
};

}  // namespace gpatoms
