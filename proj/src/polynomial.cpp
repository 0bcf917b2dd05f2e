#include "gpatoms/polynomial.hpp"

#include <algorithm>

namespace gpatoms {

namespace {

void trim(std::vector<Rational>& coeffs) {
    while (!coeffs.empty() && sgn(coeffs.back()) == 0) coeffs.pop_back();
}

}  // namespace

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
    trim(coeffs_);
}

UnivariatePolynomial UnivariatePolynomial::constant(const Rational& c) {
    return UnivariatePolynomial(std::vector<Rational>{c});
}

const Rational& UnivariatePolynomial::coefficient(std::size_t k) const {
    static const Rational zero(0);
    return k < coeffs_.size() ? coeffs_[k] : zero;
}

Rational UnivariatePolynomial::evaluate(const Rational& t) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

double UnivariatePolynomial::evaluate(double t) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
    return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial UnivariatePolynomial::operator+(const UnivariatePolynomial& other) const {
    std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] += coeffs_[k];
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) out[k] += other.coeffs_[k];
    return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial UnivariatePolynomial::operator-(const UnivariatePolynomial& other) const {
    return *this + (-other);
}

UnivariatePolynomial UnivariatePolynomial::operator-() const {
    std::vector<Rational> out(coeffs_);
    for (auto& c : out) c = -c;
    return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial UnivariatePolynomial::operator*(const UnivariatePolynomial& other) const {
    if (is_zero() || other.is_zero()) return {};
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial UnivariatePolynomial::operator*(const Rational& scalar) const {
    std::vector<Rational> out(coeffs_);
    for (auto& c : out) c *= scalar;
    return UnivariatePolynomial(std::move(out));
}

std::pair<UnivariatePolynomial, UnivariatePolynomial> UnivariatePolynomial::divmod(
    const UnivariatePolynomial& divisor) const {
    if (divisor.is_zero()) throw domain_error("polynomial division by zero");
    std::vector<Rational> rem(coeffs_);
    const auto& d = divisor.coeffs_;
    if (rem.size() < d.size()) return {UnivariatePolynomial{}, *this};
    std::vector<Rational> quot(rem.size() - d.size() + 1, Rational(0));
    const Rational& lead = d.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational factor = rem[k + d.size() - 1] / lead;
        quot[k] = factor;
        if (sgn(factor) == 0) continue;
        for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= factor * d[j];
    }
    return {UnivariatePolynomial(std::move(quot)), UnivariatePolynomial(std::move(rem))};
}

namespace {

UnivariatePolynomial poly_gcd(UnivariatePolynomial a, UnivariatePolynomial b) {
    while (!b.is_zero()) {
        auto [q, r] = a.divmod(b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    // monic for determinism
    return a * (Rational(1) / a.coefficients().back());
}

}  // namespace

std::vector<UnivariatePolynomial> sturm_chain(const UnivariatePolynomial& p) {
    if (p.is_zero()) throw domain_error("Sturm chain of the zero polynomial");
    std::vector<UnivariatePolynomial> chain;
    chain.push_back(p);
    if (p.degree() == 0) return chain;
    chain.push_back(p.derivative());
    while (chain.back().degree() > 0) {
        auto [q, r] = chain[chain.size() - 2].divmod(chain.back());
        (void)q;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int sign_variations_at(const std::vector<UnivariatePolynomial>& chain, const Rational& t) {
    int variations = 0;
    int previous = 0;
    for (const auto& q : chain) {
        int s = sgn(q.evaluate(t));
        if (s == 0) continue;
        if (previous != 0 && s != previous) ++variations;
        previous = s;
    }
    return variations;
}

int count_roots_half_open(const UnivariatePolynomial& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw domain_error("root counting for the zero polynomial");
    if (!(a < b)) throw domain_error("root counting needs a < b");
    if (p.degree() == 0) return 0;
    // Square-free part: Sturm then counts each distinct root once, and with the
    // zeros-dropped variation count V the identity V(a) - V(b) counts roots in (a, b]
    // even when a or b is itself a root (V is right-continuous at chain zeros).
    UnivariatePolynomial g = poly_gcd(p, p.derivative());
    UnivariatePolynomial squarefree = g.degree() > 0 ? p.divmod(g).first : p;
    auto chain = sturm_chain(squarefree);
    return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

std::optional<IsolationInterval> smallest_positive_root(const UnivariatePolynomial& p,
                                                        const Rational& upper,
                                                        const Rational& precision) {
    if (p.is_zero()) throw domain_error("root isolation for the zero polynomial");
    if (sgn(upper) <= 0) throw domain_error("root isolation needs upper > 0");
    if (sgn(precision) <= 0) throw domain_error("root isolation needs precision > 0");
    if (p.degree() == 0) return std::nullopt;
    UnivariatePolynomial g = poly_gcd(p, p.derivative());
    UnivariatePolynomial squarefree = g.degree() > 0 ? p.divmod(g).first : p;
    auto chain = sturm_chain(squarefree);
    const Rational zero(0);
    int at_zero = sign_variations_at(chain, zero);
    if (at_zero - sign_variations_at(chain, upper) == 0) return std::nullopt;
    // Invariant: no root in (0, lo], at least one in (lo, hi].
    Rational lo = zero;
    Rational hi = upper;
    while (hi - lo > precision) {
        Rational mid = (lo + hi) / 2;
        if (at_zero - sign_variations_at(chain, mid) > 0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return IsolationInterval{lo, hi};
}

}  // namespace gpatoms
