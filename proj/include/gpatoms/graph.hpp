#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gpatoms/errors.hpp"

namespace gpatoms {

// A clique as its members sorted by declared vertex order (the empty clique is valid).
using Clique = std::vector<std::string>;

// Finite simple graph with opaque string vertex ids.  Declared order is
// preserved and is the tie-breaker for every deterministic listing.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> vertices,
          const std::vector<std::pair<std::string, std::string>>& edges);

    std::size_t size() const { return vertices_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    // deterministic: (i, j) with i < j, lexicographic over index pairs
    std::vector<std::pair<std::string, std::string>> edges() const;
    std::size_t edge_count() const;

    bool has_vertex(const std::string& v) const { return index_.count(v) != 0; }
    std::size_t index_of(const std::string& v) const;
    bool adjacent(std::size_t i, std::size_t j) const;
    bool adjacent(const std::string& u, const std::string& v) const;
    // bitmask of neighbors of vertex i
    std::uint64_t neighbor_mask(std::size_t i) const { return adjacency_[i]; }

    Graph induced_subgraph(const std::vector<std::string>& keep) const;
    Graph induced_subgraph_mask(std::uint64_t keep) const;
    // induced subgraph on the neighbors of v (v itself excluded)
    Graph neighborhood_subgraph(const std::string& v) const;
    Graph complement() const;

    // All cliques including the empty one, in lexicographic order of the
    // sorted member index list.
    std::vector<std::uint64_t> clique_masks() const;
    std::vector<Clique> cliques() const;
    bool is_complete() const;

    // Maximal join decomposition: factors are the connected components of the
    // complement, ordered by smallest vertex index.  A single factor means
    // join-irreducible.
    std::vector<Graph> join_decomposition() const;

    Clique mask_to_clique(std::uint64_t mask) const;

private:
    std::vector<std::string> vertices_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::uint64_t> adjacency_;
};

}  // namespace gpatoms
