#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gpatoms/graph.hpp"
#include "gpatoms/rational.hpp"

namespace test_util {

using gpatoms::Graph;
using gpatoms::Rational;

inline std::vector<std::string> letter_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
    return names;
}

inline Graph make_graph(std::size_t n, const std::vector<std::pair<int, int>>& edge_indices) {
    auto names = letter_names(n);
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [i, j] : edge_indices) edges.emplace_back(names[i], names[j]);
    return Graph(names, edges);
}

// percent chance per vertex pair, raw mt19937 output for cross-platform determinism
inline Graph random_graph(std::mt19937& rng, std::size_t n, unsigned edge_percent) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng() % 100 < edge_percent) edges.emplace_back(int(i), int(j));
    return make_graph(n, edges);
}

// in (0, 1], denominators up to den_max
inline Rational random_rational_01(std::mt19937& rng, unsigned den_max = 64) {
    unsigned den = 1 + rng() % den_max;
    unsigned num = 1 + rng() % den;
    return gpatoms::make_rational(num, den);
}

// in [0, 1], including the endpoints with positive probability
inline Rational random_rational_closed_01(std::mt19937& rng, unsigned den_max = 16) {
    unsigned den = 1 + rng() % den_max;
    unsigned num = rng() % (den + 1);
    return gpatoms::make_rational(num, den);
}

// All 11 graphs on 4 vertices, one per isomorphism class.
inline std::vector<Graph> four_vertex_graphs() {
    return {
        make_graph(4, {}),                                              // empty
        make_graph(4, {{0, 1}}),                                        // one edge
        make_graph(4, {{0, 1}, {2, 3}}),                                // two disjoint edges
        make_graph(4, {{0, 1}, {1, 2}}),                                // path P3 + isolated
        make_graph(4, {{0, 1}, {1, 2}, {0, 2}}),                        // triangle + isolated
        make_graph(4, {{0, 1}, {1, 2}, {2, 3}}),                        // path P4
        make_graph(4, {{0, 1}, {0, 2}, {0, 3}}),                        // star K_{1,3}
        make_graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}),                // paw
        make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}),                // cycle C4
        make_graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {2, 3}}),        // diamond
        make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}) // K4
    };
}

}  // namespace test_util
