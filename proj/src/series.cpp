#include "gpatoms/series.hpp"

#include <algorithm>

namespace gpatoms {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw domain_error("truncated series needs at least the constant term");
}

TruncatedSeries TruncatedSeries::zero(std::size_t order) {
    return TruncatedSeries(std::vector<Rational>(order + 1, Rational(0)));
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
    auto s = zero(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const UnivariatePolynomial& p, std::size_t order) {
    auto s = zero(order);
    for (std::size_t k = 0; k <= order; ++k) s.coeffs_[k] = p.coefficient(k);
    return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
    std::size_t n = std::min(order(), other.order());
    std::vector<Rational> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) out[k] = coeffs_[k] + other.coeffs_[k];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& other) const {
    std::size_t n = std::min(order(), other.order());
    std::vector<Rational> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) out[k] = coeffs_[k] - other.coeffs_[k];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
    std::size_t n = std::min(order(), other.order());
    std::vector<Rational> out(n + 1, Rational(0));
    for (std::size_t i = 0; i <= n; ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    if (sgn(coeffs_[0]) == 0) throw domain_error("series reciprocal needs a nonzero constant term");
    std::vector<Rational> out(order() + 1);
    Rational inv0 = Rational(1) / coeffs_[0];
    out[0] = inv0;
    for (std::size_t k = 1; k <= order(); ++k) {
        Rational acc(0);
        for (std::size_t i = 1; i <= k; ++i) acc += coeffs_[i] * out[k - i];
        out[k] = -inv0 * acc;
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries TruncatedSeries::compose_with(const TruncatedSeries& g) const {
    if (sgn(g.coeffs_[0]) != 0) throw domain_error("series composition needs g(0) = 0");
    std::size_t n = std::min(order(), g.order());
    auto result = zero(n);
    auto power = one(n);  // g^0
    TruncatedSeries gn(std::vector<Rational>(g.coeffs_.begin(), g.coeffs_.begin() + n + 1));
    for (std::size_t k = 0; k <= n; ++k) {
        if (sgn(coeffs_[k]) != 0) {
            for (std::size_t j = 0; j <= n; ++j) result.coeffs_[j] += coeffs_[k] * power.coeffs_[j];
        }
        if (k < n) power = power * gn;
    }
    return result;
}

TruncatedSeries TruncatedSeries::substitute_t_over_one_plus_t() const {
    // t/(1+t) = t - t^2 + t^3 - ...
    auto g = zero(order());
    for (std::size_t k = 1; k <= order(); ++k) g.coeffs_[k] = (k % 2 == 1) ? 1 : -1;
    return compose_with(g);
}

TruncatedSeries TruncatedSeries::substitute_t_over_one_minus_t() const {
    // t/(1-t) = t + t^2 + t^3 + ...
    auto g = zero(order());
    for (std::size_t k = 1; k <= order(); ++k) g.coeffs_[k] = 1;
    return compose_with(g);
}

}  // namespace gpatoms
