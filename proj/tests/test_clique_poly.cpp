#include <doctest.h>

#include <random>

#include "gpatoms/clique_poly.hpp"
#include "test_util.hpp"

using gpatoms::CliquePolynomial;
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

std::map<std::string, Rational> random_point(std::mt19937& rng, const Graph& g) {
    std::map<std::string, Rational> x;
    for (const auto& v : g.vertices()) x.emplace(v, test_util::random_rational_closed_01(rng));
    return x;
}
}  // namespace

TEST_CASE("evaluation") {
    // complete K2: (1 - x_a)(1 - x_b)
    CliquePolynomial k2(make_graph(2, {{0, 1}}));
    CHECK(k2.evaluate(point(k2.graph(), {make_rational(1, 3), make_rational(1, 5)})) ==
          make_rational(2, 3) * make_rational(4, 5));
    CHECK(k2.evaluate(point(k2.graph(), {Rational(0), Rational(0)})) == 1);

    // edgeless K2: 1 - x_a - x_b
    CliquePolynomial e2(make_graph(2, {}));
    CHECK(e2.evaluate(point(e2.graph(), {make_rational(2, 5), make_rational(3, 10)})) ==
          make_rational(3, 10));

    // path a-b-c at (1/3,1/3,1/3): 1 - 1 + 2/9 = 2/9
    CliquePolynomial p3(make_graph(3, {{0, 1}, {1, 2}}));
    auto third = make_rational(1, 3);
    CHECK(p3.evaluate(point(p3.graph(), {third, third, third})) == make_rational(2, 9));

    // double evaluation agrees with rational evaluation
    std::map<std::string, double> xd{{"a", 1.0 / 3}, {"b", 1.0 / 3}, {"c", 1.0 / 3}};
    CHECK(p3.evaluate(xd) == doctest::Approx(2.0 / 9).epsilon(1e-12));

    // assignment must cover the vertex set exactly
    CHECK_THROWS_AS(p3.evaluate(std::map<std::string, Rational>{{"a", Rational(0)}}),
                    gpatoms::domain_error);
    std::map<std::string, Rational> extra = point(p3.graph(), {third, third, third});
    extra.emplace("zzz", Rational(0));
    CHECK_THROWS_AS(p3.evaluate(extra), gpatoms::domain_error);
}

TEST_CASE("corner evaluation equals induced subgraph evaluation") {
    std::mt19937 rng(81003);
    for (const auto& g : test_util::four_vertex_graphs()) {
        CliquePolynomial poly(g);
        auto x = random_point(rng, g);
        auto values = poly.to_values(x);
        for (std::uint64_t support = 0; support < (std::uint64_t(1) << g.size()); ++support) {
            Graph induced = g.induced_subgraph_mask(support);
            std::map<std::string, Rational> restricted;
            for (const auto& v : induced.vertices()) restricted.emplace(v, x.at(v));
            CHECK(poly.evaluate_on_mask(values, support) ==
                  CliquePolynomial(induced).evaluate(restricted));
        }
    }
}

TEST_CASE("partial derivative is minus the neighborhood polynomial") {
    std::mt19937 rng(81004);
    for (const auto& g : test_util::four_vertex_graphs()) {
        CliquePolynomial poly(g);
        for (int trial = 0; trial < 5; ++trial) {
            auto x = random_point(rng, g);
            for (const auto& j : g.vertices()) {
                Rational d = poly.partial_derivative(j, x);

                // identity: d = -K_{S(j)}(x restricted to the neighbors of j)
                Graph nbr = g.neighborhood_subgraph(j);
                std::map<std::string, Rational> xr;
                for (const auto& v : nbr.vertices()) xr.emplace(v, x.at(v));
                CHECK(d == -CliquePolynomial(nbr).evaluate(xr));

                // affine slope from two evaluations
                auto x0 = x, x1 = x;
                x0[j] = Rational(0);
                x1[j] = Rational(1);
                CHECK(d == poly.evaluate(x1) - poly.evaluate(x0));
            }
        }
    }
}

TEST_CASE("ray polynomial") {
    CliquePolynomial p3(make_graph(3, {{0, 1}, {1, 2}}));
    auto ray = p3.ray_polynomial(point(p3.graph(), {Rational(1), Rational(1), Rational(1)}));
    // 1 - 3r + 2r^2
    CHECK(ray.coefficients() ==
          std::vector<Rational>{Rational(1), Rational(-3), Rational(2)});
    // evaluating the ray polynomial at r equals evaluating K at r*x
    std::mt19937 rng(81005);
    for (const auto& g : test_util::four_vertex_graphs()) {
        CliquePolynomial poly(g);
        auto x = random_point(rng, g);
        auto h = poly.ray_polynomial(x);
        for (long num = 0; num <= 4; ++num) {
            Rational r = make_rational(num, 4);
            std::map<std::string, Rational> scaled;
            for (const auto& [v, value] : x) scaled.emplace(v, r * value);
            CHECK(h.evaluate(r) == poly.evaluate(scaled));
        }
    }
}

TEST_CASE("zero restriction") {
    std::mt19937 rng(81006);
    for (const auto& g : test_util::four_vertex_graphs()) {
        CliquePolynomial poly(g);
        for (int trial = 0; trial < 8; ++trial) {
            // random point with deliberate zeros
            std::map<std::string, Rational> x;
            for (const auto& v : g.vertices())
                x.emplace(v, rng() % 2 ? Rational(0) : test_util::random_rational_01(rng));
            auto [restricted_graph, restricted_x] = gpatoms::restrict_zeros(g, x);
            for (const auto& [v, value] : restricted_x) CHECK(gpatoms::sign(value) > 0);
            CHECK(CliquePolynomial(restricted_graph).evaluate(restricted_x) == poly.evaluate(x));
        }
    }
}

TEST_CASE("join factorization") {
    // C4 = {a,c} + {b,d}: K = (1 - x_a - x_c)(1 - x_b - x_d)
    Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    std::mt19937 rng(81007);
    for (int trial = 0; trial < 10; ++trial) {
        auto x = random_point(rng, c4);
        auto check = gpatoms::join_factorization_check(c4, x);
        REQUIRE(check.factor_values.size() == 2);
        CHECK(check.product_matches);
        CHECK(check.full_value ==
              (1 - x["a"] - x["c"]) * (1 - x["b"] - x["d"]));
    }

    // P3 also splits: the middle vertex is adjacent to both ends
    Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
    auto px = point(p3, {make_rational(1, 3), make_rational(1, 7), make_rational(2, 5)});
    auto pcheck = gpatoms::join_factorization_check(p3, px);
    CHECK(pcheck.factor_values.size() == 2);
    CHECK(pcheck.full_value == (1 - px["a"] - px["c"]) * (1 - px["b"]));
    CHECK(pcheck.product_matches);

    // join-irreducible graph (P4 is self-complementary): single factor
    Graph p4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    auto x = point(p4, {make_rational(1, 3), make_rational(1, 7), make_rational(2, 5),
                        make_rational(1, 11)});
    auto check = gpatoms::join_factorization_check(p4, x);
    CHECK(check.factor_values.size() == 1);
    CHECK(check.factor_values[0] == check.full_value);
    CHECK(check.product_matches);
}
