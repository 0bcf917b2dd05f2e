#include "gpatoms/graph.hpp"

#include <algorithm>
#include <bit>

namespace gpatoms {

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : vertices_(std::move(vertices)) {
    if (vertices_.size() > 64) throw domain_error("graphs are limited to 64 vertices");
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i].empty()) throw domain_error("empty vertex id");
        if (!index_.emplace(vertices_[i], i).second)
            throw domain_error("duplicate vertex '" + vertices_[i] + "'");
    }
    adjacency_.assign(vertices_.size(), 0);
    for (const auto& [u, v] : edges) {
        std::size_t i = index_of(u);
        std::size_t j = index_of(v);
        if (i == j) throw domain_error("self-loop at vertex '" + u + "'");
        adjacency_[i] |= std::uint64_t(1) << j;
        adjacency_[j] |= std::uint64_t(1) << i;
    }
}

std::size_t Graph::index_of(const std::string& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw domain_error("unknown vertex '" + v + "'");
    return it->second;
}

bool Graph::adjacent(std::size_t i, std::size_t j) const {
    return (adjacency_[i] >> j) & 1;
}

bool Graph::adjacent(const std::string& u, const std::string& v) const {
    return adjacent(index_of(u), index_of(v));
}

std::vector<std::pair<std::string, std::string>> Graph::edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (adjacent(i, j)) out.emplace_back(vertices_[i], vertices_[j]);
    return out;
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < size(); ++i) total += std::popcount(adjacency_[i]);
    return total / 2;
}

Graph Graph::induced_subgraph_mask(std::uint64_t keep) const {
    std::vector<std::string> vs;
    for (std::size_t i = 0; i < size(); ++i)
        if ((keep >> i) & 1) vs.push_back(vertices_[i]);
    std::vector<std::pair<std::string, std::string>> es;
    for (std::size_t i = 0; i < size(); ++i) {
        if (!((keep >> i) & 1)) continue;
        for (std::size_t j = i + 1; j < size(); ++j)
            if (((keep >> j) & 1) && adjacent(i, j)) es.emplace_back(vertices_[i], vertices_[j]);
    }
    return Graph(std::move(vs), es);
}

Graph Graph::induced_subgraph(const std::vector<std::string>& keep) const {
    std::uint64_t mask = 0;
    for (const auto& v : keep) {
        std::uint64_t bit = std::uint64_t(1) << index_of(v);
        if (mask & bit) throw domain_error("duplicate vertex '" + v + "' in subgraph selection");
        mask |= bit;
    }
    return induced_subgraph_mask(mask);
}

Graph Graph::neighborhood_subgraph(const std::string& v) const {
    return induced_subgraph_mask(adjacency_[index_of(v)]);
}

Graph Graph::complement() const {
    std::vector<std::pair<std::string, std::string>> es;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (!adjacent(i, j)) es.emplace_back(vertices_[i], vertices_[j]);
    return Graph(vertices_, es);
}

std::vector<std::uint64_t> Graph::clique_masks() const {
    // Depth-first extension by increasing vertex index emits cliques exactly in
    // lexicographic order of their sorted member lists, empty clique first.
    std::vector<std::uint64_t> out;
    struct Frame {
        std::uint64_t clique;
        std::uint64_t candidates;  // vertices > max(clique) adjacent to all members
        std::size_t next;
    };
    std::uint64_t all = size() == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << size()) - 1;
    std::vector<Frame> stack;
    stack.push_back({0, all, 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next == 0) out.push_back(f.clique);
        std::size_t i = f.next;
        while (i < size() && !((f.candidates >> i) & 1)) ++i;
        if (i >= size()) {
            stack.pop_back();
            continue;
        }
        f.next = i + 1;
        std::uint64_t rest_above = f.candidates & adjacency_[i] & ~((std::uint64_t(2) << i) - 1);
        stack.push_back({f.clique | (std::uint64_t(1) << i), rest_above, 0});
    }
    return out;
}

Clique Graph::mask_to_clique(std::uint64_t mask) const {
    Clique c;
    for (std::size_t i = 0; i < size(); ++i)
        if ((mask >> i) & 1) c.push_back(vertices_[i]);
    return c;
}

std::vector<Clique> Graph::cliques() const {
    std::vector<Clique> out;
    for (std::uint64_t mask : clique_masks()) out.push_back(mask_to_clique(mask));
    return out;
}

bool Graph::is_complete() const {
    return edge_count() == size() * (size() - 1) / 2;
}

std::vector<Graph> Graph::join_decomposition() const {
    if (size() == 0) return {};
    Graph co = complement();
    std::vector<int> component(size(), -1);
    int count = 0;
    for (std::size_t start = 0; start < size(); ++start) {
        if (component[start] != -1) continue;
        std::vector<std::size_t> queue{start};
        component[start] = count;
        while (!queue.empty()) {
            std::size_t i = queue.back();
            queue.pop_back();
            for (std::size_t j = 0; j < size(); ++j) {
                if (co.adjacent(i, j) && component[j] == -1) {
                    component[j] = count;
                    queue.push_back(j);
                }
            }
        }
        ++count;
    }
    // components are numbered by smallest vertex index already
    std::vector<std::uint64_t> masks(count, 0);
    for (std::size_t i = 0; i < size(); ++i) masks[component[i]] |= std::uint64_t(1) << i;
    std::vector<Graph> factors;
    for (auto m : masks) factors.push_back(induced_subgraph_mask(m));
    return factors;
}

}  // namespace gpatoms
