#ifndef DIVERSOL_GRAPH_HPP
#define DIVERSOL_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "diversol/errors.hpp"
#include "diversol/sets.hpp"

namespace diversol {

// Simple undirected graph with dense edge ids. No loops, no multi-edges.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }

    // -1 when u, v are not adjacent.
    int edge_id(int u, int v) const;
    const std::vector<int>& incident_edges(int v) const {
        return incidence_[static_cast<std::size_t>(v)];
    }

    bool is_perfect_matching(const ElemSet& edge_ids) const;

    // Deterministic exact search (memoized pairing of the lowest uncovered
    // vertex). Empty graph on zero vertices has the empty perfect matching.
    std::optional<ElemSet> find_perfect_matching() const;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> incidence_;
};

// All perfect matchings, by recursive vertex pairing; refuses when
// n > max_vertices.
std::vector<ElemSet> enumerate_perfect_matchings(const Graph& g, int max_vertices = 14);

}  // namespace diversol

#endif
