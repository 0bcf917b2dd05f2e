#include <doctest.h>

#include <random>

#include "gpatoms/clique_poly.hpp"
#include "gpatoms/region.hpp"
#include "test_util.hpp"

using gpatoms::Graph;
using gpatoms::make_rational;
using gpatoms::Rational;
using test_util::make_graph;

namespace {
std::map<std::string, Rational> point(const Graph& g, std::vector<Rational> values) {
    std::map<std::string, Rational> x;
    for (std::size_t i = 0; i < g.size(); ++i) x.emplace(g.vertices()[i], values[i]);
    return x;
}
}  // namespace

TEST_CASE("membership examples") {
    Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
    auto third = make_rational(1, 3);
    auto half = make_rational(1, 2);
    CHECK(gpatoms::region_membership(p3, point(p3, {third, third, third})));
    // the induced edgeless pair {a,c} hits zero at (1/2, ., 1/2)
    CHECK_FALSE(gpatoms::region_membership(p3, point(p3, {half, half, half})));
    CHECK(gpatoms::region_membership(p3, point(p3, {Rational(0), Rational(0), Rational(0)})));

    Graph k1 = make_graph(1, {});
    CHECK_FALSE(gpatoms::region_membership(k1, point(k1, {Rational(1)})));
    CHECK(gpatoms::region_membership(k1, point(k1, {make_rational(9, 10)})));

    // complete graphs: everything below 1 everywhere is inside
    Graph k3 = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    auto near_one = make_rational(99, 100);
    CHECK(gpatoms::region_membership(k3, point(k3, {near_one, near_one, near_one})));
    CHECK_FALSE(gpatoms::region_membership(k3, point(k3, {Rational(1), near_one, near_one})));

    // out-of-box coordinates rejected
    CHECK_THROWS_AS(gpatoms::region_membership(k1, point(k1, {make_rational(11, 10)})),
                    gpatoms::domain_error);
    CHECK_THROWS_AS(gpatoms::region_membership(k1, point(k1, {make_rational(-1, 10)})),
                    gpatoms::domain_error);
}

TEST_CASE("ray test agrees with the corner oracle") {
    std::mt19937 rng(81010);
    int members = 0, outsiders = 0;
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = test_util::random_graph(rng, 1 + rng() % 6, rng() % 101);
        std::map<std::string, Rational> x;
        for (const auto& v : g.vertices())
            x.emplace(v, test_util::random_rational_closed_01(rng, 8));
        bool ray = gpatoms::region_membership(g, x);
        bool corner = gpatoms::region_membership_corner_oracle(g, x);
        CHECK(ray == corner);
        (ray ? members : outsiders)++;
    }
    // the sample genuinely exercises both outcomes
    CHECK(members > 30);
    CHECK(outsiders > 30);
}

TEST_CASE("float membership matches exact on clear-margin points") {
    std::mt19937 rng(81011);
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = test_util::random_graph(rng, 1 + rng() % 5, rng() % 101);
        std::map<std::string, Rational> x;
        std::map<std::string, double> xd;
        for (const auto& v : g.vertices()) {
            Rational value = test_util::random_rational_closed_01(rng, 8);
            x.emplace(v, value);
            xd.emplace(v, gpatoms::to_double(value));
        }
        // compare only when every corner is at least 1e-6 away from zero
        gpatoms::CliquePolynomial poly(g);
        auto values = poly.to_values(x);
        bool clear = true;
        for (std::uint64_t m = 0; m < (std::uint64_t(1) << g.size()); ++m) {
            Rational c = poly.evaluate_on_mask(values, m);
            if (abs(c) < make_rational(1, 1000000)) clear = false;
        }
        if (!clear) continue;
        CHECK(gpatoms::region_membership_float(g, xd, 1e-9) == gpatoms::region_membership(g, x));
    }
}

TEST_CASE("rho examples") {
    Rational prec = gpatoms::default_root_precision();
    CHECK(prec == Rational(1) / (Rational(1024) * 1024 * 1024 * 1024));

    // edgeless pair, u = (1,1): 1 - 2r vanishes at 1/2
    Graph e2 = make_graph(2, {});
    auto r1 = gpatoms::rho(e2, point(e2, {Rational(1), Rational(1)}), prec);
    CHECK(r1.interval.lo < make_rational(1, 2));
    CHECK(r1.interval.hi >= make_rational(1, 2));
    CHECK(r1.interval.hi - r1.interval.lo <= prec);
    CHECK_FALSE(r1.hit_cap);

    // complete K3, u = (1,1,1): (1-r)^3, root at the cap r = 1
    Graph k3 = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    auto r2 = gpatoms::rho(k3, point(k3, {Rational(1), Rational(1), Rational(1)}), prec);
    CHECK(r2.interval.hi == Rational(1));
    CHECK(r2.hit_cap);

    // path, u = (1,1,1): smallest root of 1 - 3r + 2r^2 is 1/2
    Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
    auto r3 = gpatoms::rho(p3, point(p3, {Rational(1), Rational(1), Rational(1)}), prec);
    CHECK(r3.interval.lo < make_rational(1, 2));
    CHECK(r3.interval.hi >= make_rational(1, 2));
    CHECK_FALSE(r3.hit_cap);

    // scaling the direction scales the cap: u = (2,2) halves rho
    auto r4 = gpatoms::rho(e2, point(e2, {Rational(2), Rational(2)}), prec);
    CHECK(r4.interval.lo < make_rational(1, 4));
    CHECK(r4.interval.hi >= make_rational(1, 4));

    CHECK_THROWS_AS(gpatoms::rho(e2, point(e2, {Rational(0), Rational(0)}), prec),
                    gpatoms::domain_error);
}

TEST_CASE("rho bounds the region along rays") {
    std::mt19937 rng(81012);
    Rational prec = make_rational(1, 1 << 20);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = test_util::random_graph(rng, 1 + rng() % 5, rng() % 101);
        std::map<std::string, Rational> u;
        for (const auto& v : g.vertices()) u.emplace(v, test_util::random_rational_01(rng, 8));
        auto result = gpatoms::rho(g, u, prec);

        // below the isolated root the whole ray segment stays in the region
        std::map<std::string, Rational> inside;
        for (const auto& [v, value] : u) inside.emplace(v, result.interval.lo * value);
        CHECK(gpatoms::region_membership(g, inside));

        // at or past hi the full-graph polynomial has hit zero: scaling hi*u
        // (clamped into the box) must fail membership when hi*u stays in the box
        if (!result.hit_cap) {
            bool in_box = true;
            std::map<std::string, Rational> outside;
            for (const auto& [v, value] : u) {
                Rational coord = result.interval.hi * value;
                if (coord > 1) in_box = false;
                outside.emplace(v, coord);
            }
            if (in_box) CHECK_FALSE(gpatoms::region_membership(g, outside));
        }

        // star-shapedness: sampled scalings of an inside point stay inside
        for (long num = 1; num <= 3; ++num) {
            std::map<std::string, Rational> scaled;
            for (const auto& [v, value] : inside) scaled.emplace(v, make_rational(num, 4) * value);
            CHECK(gpatoms::region_membership(g, scaled));
        }
    }
}

TEST_CASE("boundary classification") {
    // complete K2 at (1,1): gradient vanishes, witness {a} + {b}
    Graph k2 = make_graph(2, {{0, 1}});
    auto c1 = gpatoms::classify_boundary_point(k2, point(k2, {Rational(1), Rational(1)}));
    CHECK(c1.on_boundary);
    CHECK(c1.gradient_vanishes);
    REQUIRE(c1.witness_split.has_value());
    CHECK(c1.witness_split->first == std::vector<std::string>{"a"});
    CHECK(c1.witness_split->second == std::vector<std::string>{"b"});

    // path at (1/2,1/2,1/2): on the boundary but the gradient does not vanish
    Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
    auto half = make_rational(1, 2);
    auto c2 = gpatoms::classify_boundary_point(p3, point(p3, {half, half, half}));
    CHECK(c2.on_boundary);
    CHECK_FALSE(c2.gradient_vanishes);
    CHECK_FALSE(c2.witness_split.has_value());

    // interior point: not on the boundary at all
    auto c3 = gpatoms::classify_boundary_point(p3, point(p3, {half, Rational(0), Rational(0)}));
    CHECK_FALSE(c3.on_boundary);

    // C4 at (1/2,1/2,1/2,1/2): both join factors vanish
    Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    auto c5 = gpatoms::classify_boundary_point(c4, point(c4, {half, half, half, half}));
    CHECK(c5.on_boundary);
    CHECK(c5.gradient_vanishes);
    REQUIRE(c5.witness_split.has_value());
    CHECK(c5.witness_split->first == std::vector<std::string>{"a", "c"});
    CHECK(c5.witness_split->second == std::vector<std::string>{"b", "d"});

    // K3 at (1,1,1): first singleton factor against the rest
    Graph k3 = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    auto c6 = gpatoms::classify_boundary_point(k3, point(k3, {Rational(1), Rational(1), Rational(1)}));
    CHECK(c6.gradient_vanishes);
    REQUIRE(c6.witness_split.has_value());

    // zero coordinates drop out: complete K2 joined with an untouched vertex.
    // At (1,1,0) the support is {a,b} and its gradient still vanishes.
    Graph k2_plus = make_graph(3, {{0, 1}});
    auto c7 = gpatoms::classify_boundary_point(
        k2_plus, point(k2_plus, {Rational(1), Rational(1), Rational(0)}));
    CHECK(c7.on_boundary);
    CHECK(c7.gradient_vanishes);
    REQUIRE(c7.witness_split.has_value());

    // negative coordinates rejected
    CHECK_THROWS_AS(
        gpatoms::classify_boundary_point(k2, point(k2, {Rational(-1), Rational(1)})),
        gpatoms::domain_error);

    // witness factors re-evaluate to zero (checked independently here)
    for (const auto& [graph, split] :
         std::vector<std::pair<Graph, gpatoms::BoundaryClassification>>{{k2, c1}, {c4, c5}, {k3, c6}}) {
        std::map<std::string, Rational> x =
            graph.size() == 2 ? point(graph, {Rational(1), Rational(1)})
            : graph.size() == 3
                ? point(graph, {Rational(1), Rational(1), Rational(1)})
                : point(graph, {half, half, half, half});
        for (const auto& side : {split.witness_split->first, split.witness_split->second}) {
            Graph factor = graph.induced_subgraph(side);
            std::map<std::string, Rational> restricted;
            for (const auto& v : side) restricted.emplace(v, x.at(v));
            CHECK(gpatoms::CliquePolynomial(factor).evaluate(restricted) == 0);
        }
    }
}
