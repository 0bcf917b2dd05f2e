#include <doctest.h>

#include <random>

#include "gpatoms/graph.hpp"
#include "test_util.hpp"

using gpatoms::Clique;
using gpatoms::Graph;
using test_util::make_graph;

TEST_CASE("construction and validation") {
    Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
    CHECK(p3.size() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.adjacent("a", "b"));
    CHECK(p3.adjacent("b", "a"));
    CHECK_FALSE(p3.adjacent("a", "c"));
    CHECK(p3.index_of("c") == 2);
    CHECK_THROWS_AS(p3.index_of("zzz"), gpatoms::domain_error);

    CHECK_THROWS_AS(Graph({"a", "a"}, {}), gpatoms::domain_error);        // duplicate vertex
    CHECK_THROWS_AS(Graph({"a"}, {{"a", "a"}}), gpatoms::domain_error);   // self-loop
    CHECK_THROWS_AS(Graph({"a"}, {{"a", "b"}}), gpatoms::domain_error);   // unknown endpoint

    // duplicate edges collapse
    Graph dup({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    CHECK(dup.edge_count() == 1);

    // deterministic edge listing: index pairs i < j, lexicographic
    Graph c4 = make_graph(4, {{2, 3}, {0, 3}, {1, 2}, {0, 1}});
    std::vector<std::pair<std::string, std::string>> expected = {
        {"a", "b"}, {"a", "d"}, {"b", "c"}, {"c", "d"}};
    CHECK(c4.edges() == expected);
}

TEST_CASE("clique enumeration") {
    // path a-b-c: exactly {}, {a}, {a,b}, {b}, {b,c}, {c} in lex order
    Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
    std::vector<Clique> expected = {{}, {"a"}, {"a", "b"}, {"b"}, {"b", "c"}, {"c"}};
    CHECK(p3.cliques() == expected);

    // complete K3: all 8 subsets
    Graph k3 = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.cliques().size() == 8);
    CHECK(k3.is_complete());

    // edgeless: empty set and singletons only
    Graph e3 = make_graph(3, {});
    CHECK(e3.cliques().size() == 4);
    CHECK_FALSE(e3.is_complete());

    // single vertex graphs are complete; so is the empty graph
    CHECK(make_graph(1, {}).is_complete());
    CHECK(make_graph(0, {}).is_complete());

    // 2^n cliques iff complete
    for (const auto& g : test_util::four_vertex_graphs())
        CHECK((g.cliques().size() == 16) == g.is_complete());
}

TEST_CASE("induced and derived graphs") {
    Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
    Graph ac = p3.induced_subgraph({"a", "c"});
    CHECK(ac.size() == 2);
    CHECK(ac.edge_count() == 0);

    Graph same = p3.induced_subgraph({"a", "b", "c"});
    CHECK(same.edges() == p3.edges());

    Graph k3 = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.induced_subgraph({"a", "b"}).edge_count() == 1);
    CHECK_THROWS_AS(p3.induced_subgraph({"a", "zzz"}), gpatoms::domain_error);

    // neighborhood subgraphs
    CHECK(p3.neighborhood_subgraph("b").size() == 2);
    CHECK(p3.neighborhood_subgraph("b").edge_count() == 0);
    CHECK(make_graph(3, {}).neighborhood_subgraph("a").size() == 0);
    Graph k3_nbr = k3.neighborhood_subgraph("a");
    CHECK(k3_nbr.size() == 2);
    CHECK(k3_nbr.edge_count() == 1);

    // complement
    CHECK(p3.complement().edges() == std::vector<std::pair<std::string, std::string>>{{"a", "c"}});
    CHECK(k3.complement().edge_count() == 0);
}

TEST_CASE("join decomposition") {
    // edgeless on 3 vertices: complement complete, hence connected -> irreducible
    CHECK(make_graph(3, {}).join_decomposition().size() == 1);

    // complete K3: three singleton factors
    auto factors = make_graph(3, {{0, 1}, {1, 2}, {0, 2}}).join_decomposition();
    REQUIRE(factors.size() == 3);
    CHECK(factors[0].vertices() == std::vector<std::string>{"a"});
    CHECK(factors[1].vertices() == std::vector<std::string>{"b"});
    CHECK(factors[2].vertices() == std::vector<std::string>{"c"});

    // two disjoint edges: complement is the 4-cycle a-c-b-d, connected -> irreducible
    CHECK(make_graph(4, {{0, 1}, {2, 3}}).join_decomposition().size() == 1);

    // C4 = join of two edgeless pairs {a,c} and {b,d}
    auto c4_factors = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}).join_decomposition();
    REQUIRE(c4_factors.size() == 2);
    CHECK(c4_factors[0].vertices() == std::vector<std::string>{"a", "c"});
    CHECK(c4_factors[1].vertices() == std::vector<std::string>{"b", "d"});
    CHECK(c4_factors[0].edge_count() == 0);

    // factors are pairwise fully adjacent and individually join-irreducible
    std::mt19937 rng(81001);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = test_util::random_graph(rng, 2 + rng() % 5, 20 + rng() % 70);
        auto fs = g.join_decomposition();
        std::size_t total = 0;
        for (const auto& f : fs) {
            total += f.size();
            CHECK(f.join_decomposition().size() == 1);
        }
        CHECK(total == g.size());
        for (std::size_t i = 0; i < fs.size(); ++i)
            for (std::size_t j = i + 1; j < fs.size(); ++j)
                for (const auto& u : fs[i].vertices())
                    for (const auto& v : fs[j].vertices()) CHECK(g.adjacent(u, v));
    }
}

TEST_CASE("clique count multiplies over joins") {
    // join two random graphs explicitly, check |cliques| multiplies
    std::mt19937 rng(81002);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n1 = 1 + rng() % 3, n2 = 1 + rng() % 3;
        Graph g1 = test_util::random_graph(rng, n1, 50);
        Graph g2 = test_util::random_graph(rng, n2, 50);
        std::vector<std::string> names;
        std::vector<std::pair<std::string, std::string>> edges;
        for (const auto& v : g1.vertices()) names.push_back("L" + v);
        for (const auto& v : g2.vertices()) names.push_back("R" + v);
        for (const auto& [u, v] : g1.edges()) edges.emplace_back("L" + u, "L" + v);
        for (const auto& [u, v] : g2.edges()) edges.emplace_back("R" + u, "R" + v);
        for (const auto& u : g1.vertices())
            for (const auto& v : g2.vertices()) edges.emplace_back("L" + u, "R" + v);
        Graph joined(names, edges);
        CHECK(joined.cliques().size() == g1.cliques().size() * g2.cliques().size());
    }
}
