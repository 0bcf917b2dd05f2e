#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpatoms/clique_poly.hpp"
#include "gpatoms/graph.hpp"
#include "gpatoms/polynomial.hpp"

namespace gpatoms {

// Default width for exact root isolation: 2^-40.
Rational default_root_precision();

// x in [0, 1]^V belongs to the convergence region iff K_{G'}(x|_{G'}) > 0 for
// every induced subgraph G'.  Decided exactly by the equivalent ray test:
// r -> K_G(r x) has no root in (0, 1].
bool region_membership(const Graph& g, const std::map<std::string, Rational>& x);

// Equivalent corner test over all 2^n points y with y_v in {0, x_v} — the
// brute-force oracle form (each corner is an induced-subgraph evaluation).
bool region_membership_corner_oracle(const Graph& g, const std::map<std::string, Rational>& x);

// Float-mode corner test: every corner value must exceed eps.
bool region_membership_float(const Graph& g, const std::map<std::string, double>& x, double eps);

// Boundary radius along the ray direction u >= 0 (u != 0): isolates the
// smallest positive root of r -> K_G(r u).  The search is capped at the r
// where max_v(r u_v) reaches 1; `hit_cap` reports a root exactly at the cap
// (complete along the support) or — defensively — no root at or below it.
struct RhoResult {
    IsolationInterval interval;
    bool hit_cap;
};
RhoResult rho(const Graph& g, const std::map<std::string, Rational>& u, const Rational& precision);

// Classification of a nonnegative point with K_G(x) = 0.  The gradient is
// taken on the positive-support subgraph G+ (where K_{G+} agrees with K_G);
// it vanishes exactly when G+ splits as a join G_0 + G_1 with both factor
// polynomials zero, and then a verified witness split is produced.
struct BoundaryClassification {
    bool on_boundary = false;       // false when K_G(x) != 0
    bool gradient_vanishes = false;
    std::optional<std::pair<std::vector<std::string>, std::vector<std::string>>> witness_split;
};
BoundaryClassification classify_boundary_point(const Graph& g,
                                               const std::map<std::string, Rational>& x);

}  // namespace gpatoms
