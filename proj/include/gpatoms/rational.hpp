#pragma once

#include <gmpxx.h>

#include <string>

#include "gpatoms/errors.hpp"

namespace gpatoms {

// Exact rationals.  mpq_class already guarantees the invariants we need once
// canonicalized: lowest terms, positive denominator, exact comparisons.
using Rational = mpq_class;

// Parses "p/q" or "p" (q > 0 after canonicalization; "p/0" is rejected).
Rational rational_from_string(const std::string& text);

// Lowest-terms "p/q"; "/q" omitted when the denominator is 1.
std::string rational_to_string(const Rational& value);

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline double to_double(const Rational& value) { return value.get_d(); }

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace gpatoms
