#include "diversol/graph.hpp"

#include <unordered_map>
#include <unordered_set>

namespace diversol {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw InputError("graph needs n >= 0");
    incidence_.resize(static_cast<std::size_t>(n));
    std::unordered_set<long long> seen;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto& [u, v] = edges_[i];
        if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("edge endpoint out of range");
        if (u == v) throw InputError("loops are not allowed");
        if (u > v) std::swap(u, v);
        long long key = static_cast<long long>(u) * n + v;
        if (!seen.insert(key).second) throw InputError("multi-edges are not allowed");
        incidence_[static_cast<std::size_t>(u)].push_back(static_cast<int>(i));
        incidence_[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    }
}

int Graph::edge_id(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InputError("vertex out of range");
    for (int e : incidence_[static_cast<std::size_t>(u)]) {
        auto [a, b] = edges_[static_cast<std::size_t>(e)];
        if ((a == u && b == v) || (a == v && b == u)) return e;
    }
    return -1;
}

bool Graph::is_perfect_matching(const ElemSet& edge_ids) const {
    if (static_cast<int>(edge_ids.size()) * 2 != n_) return false;
    std::vector<bool> covered(static_cast<std::size_t>(n_), false);
    for (int e : edge_ids) {
        if (e < 0 || e >= num_edges()) return false;
        auto [u, v] = edges_[static_cast<std::size_t>(e)];
        if (covered[static_cast<std::size_t>(u)] || covered[static_cast<std::size_t>(v)]) return false;
        covered[static_cast<std::size_t>(u)] = covered[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

namespace {

bool pair_up(const Graph& g, std::uint64_t covered, std::vector<int>& picked,
             std::unordered_set<std::uint64_t>& dead) {
    const int n = g.num_vertices();
    int first = -1;
    for (int v = 0; v < n; ++v)
        if (!(covered >> v & 1)) {
            first = v;
            break;
        }
    if (first < 0) return true;
    if (dead.count(covered)) return false;
    for (int e : g.incident_edges(first)) {
        auto [a, b] = g.edge(e);
        int other = a == first ? b : a;
        if (covered >> other & 1) continue;
        picked.push_back(e);
        if (pair_up(g, covered | (std::uint64_t{1} << first) | (std::uint64_t{1} << other), picked,
                    dead))
            return true;
        picked.pop_back();
    }
    dead.insert(covered);
    return false;
}

void enumerate_rec(const Graph& g, std::uint64_t covered, std::vector<int>& picked,
                   std::vector<ElemSet>& out) {
    const int n = g.num_vertices();
    int first = -1;
    for (int v = 0; v < n; ++v)
        if (!(covered >> v & 1)) {
            first = v;
            break;
        }
    if (first < 0) {
        out.push_back(make_set(picked));
        return;
    }
    for (int e : g.incident_edges(first)) {
        auto [a, b] = g.edge(e);
        int other = a == first ? b : a;
        if (covered >> other & 1) continue;
        picked.push_back(e);
        enumerate_rec(g, covered | (std::uint64_t{1} << first) | (std::uint64_t{1} << other),
                      picked, out);
        picked.pop_back();
    }
}

}  // namespace

std::optional<ElemSet> Graph::find_perfect_matching() const {
    if (n_ % 2 != 0) return std::nullopt;
    if (n_ > 62) throw BudgetError("perfect matching search limited to 62 vertices");
    std::vector<int> picked;
    std::unordered_set<std::uint64_t> dead;
    if (pair_up(*this, 0, picked, dead)) return make_set(picked);
    return std::nullopt;
}

std::vector<ElemSet> enumerate_perfect_matchings(const Graph& g, int max_vertices) {
    if (g.num_vertices() > max_vertices)
        throw BudgetError("perfect matching enumeration limited to " +
                          std::to_string(max_vertices) + " vertices");
    std::vector<ElemSet> out;
    if (g.num_vertices() % 2 != 0) return out;
    std::vector<int> picked;
    enumerate_rec(g, 0, picked, out);
    return out;
}

}  // namespace diversol
