#include "diversol/optim.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace diversol {

GreedyBasisResult greedy_max_weight_basis(const Matroid& m, const WeightFunction& w,
                                          const ElemSet& restrict_to) {
    if (!is_subset(restrict_to, m.ground()))
        throw InputError("greedy restriction is not a subset of the ground set");
    ElemSet order = restrict_to;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return w.of(a) > w.of(b) || (w.of(a) == w.of(b) && a < b); });
    GreedyBasisResult result;
    for (int e : order) {
        ElemSet candidate = set_union(result.basis, {e});
        if (m.is_independent(candidate)) {
            result.basis = std::move(candidate);
            result.pick_order.push_back(e);
            result.weight += w.of(e);
        }
    }
    return result;
}

namespace {

struct PathCost {
    Weight cost = std::numeric_limits<Weight>::max() / 4;
    int arcs = std::numeric_limits<int>::max() / 4;

    bool operator<(const PathCost& other) const {
        if (cost != other.cost) return cost < other.cost;
        return arcs < other.arcs;
    }
};

// One round of weighted matroid intersection: augment `current` by a
// minimum-cost, then fewest-arc source-to-sink path in the exchange graph.
// Returns false when no augmenting path exists.
bool augment(const Matroid& m1, const Matroid& m2, const WeightFunction& w, ElemSet& current) {
    const ElemSet& ground = m1.ground();
    const int n = static_cast<int>(ground.size());
    std::vector<bool> in_current(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i)
        if (set_contains(current, ground[static_cast<std::size_t>(i)])) in_current[static_cast<std::size_t>(i)] = true;

    auto node_cost = [&](int i) -> Weight {
        Weight we = w.of(ground[static_cast<std::size_t>(i)]);
        return in_current[static_cast<std::size_t>(i)] ? we : -we;
    };

    // Sources: y with I + y independent in M1. Sinks: same for M2.
    std::vector<bool> source(static_cast<std::size_t>(n), false), sink(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        if (in_current[static_cast<std::size_t>(i)]) continue;
        ElemSet plus = set_union(current, {ground[static_cast<std::size_t>(i)]});
        if (m1.is_independent(plus)) source[static_cast<std::size_t>(i)] = true;
        if (m2.is_independent(plus)) sink[static_cast<std::size_t>(i)] = true;
    }

    // Exchange arcs. x in I, y outside:
    //   x -> y  when I - x + y is independent in M1,
    //   y -> x  when I - x + y is independent in M2.
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
    for (int xi = 0; xi < n; ++xi) {
        if (!in_current[static_cast<std::size_t>(xi)]) continue;
        ElemSet removed = without_element(current, ground[static_cast<std::size_t>(xi)]);
        for (int yi = 0; yi < n; ++yi) {
            if (in_current[static_cast<std::size_t>(yi)]) continue;
            ElemSet swapped = set_union(removed, {ground[static_cast<std::size_t>(yi)]});
            if (m1.is_independent(swapped)) succ[static_cast<std::size_t>(xi)].push_back(yi);
            if (m2.is_independent(swapped)) succ[static_cast<std::size_t>(yi)].push_back(xi);
        }
    }

    // Bellman-Ford over (cost, arcs); extreme current sets admit no negative
    // cycles, so n rounds settle all simple paths.
    std::vector<PathCost> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<bool> reached(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i)
        if (source[static_cast<std::size_t>(i)]) {
            dist[static_cast<std::size_t>(i)] = PathCost{node_cost(i), 0};
            reached[static_cast<std::size_t>(i)] = true;
        }
    for (int round = 0; round < n + 1; ++round) {
        bool changed = false;
        for (int u = 0; u < n; ++u) {
            if (!reached[static_cast<std::size_t>(u)]) continue;
            for (int v : succ[static_cast<std::size_t>(u)]) {
                PathCost candidate{dist[static_cast<std::size_t>(u)].cost + node_cost(v),
                                   dist[static_cast<std::size_t>(u)].arcs + 1};
                if (!reached[static_cast<std::size_t>(v)] || candidate < dist[static_cast<std::size_t>(v)]) {
                    dist[static_cast<std::size_t>(v)] = candidate;
                    parent[static_cast<std::size_t>(v)] = u;
                    reached[static_cast<std::size_t>(v)] = true;
                    changed = true;
                }
            }
        }
        if (!changed) break;
    }

    int best = -1;
    for (int i = 0; i < n; ++i) {
        if (!sink[static_cast<std::size_t>(i)] || !reached[static_cast<std::size_t>(i)]) continue;
        if (best < 0 || dist[static_cast<std::size_t>(i)] < dist[static_cast<std::size_t>(best)]) best = i;
    }
    if (best < 0) return false;

    ElemSet toggled;
    for (int v = best; v >= 0; v = parent[static_cast<std::size_t>(v)])
        toggled.push_back(ground[static_cast<std::size_t>(v)]);
    current = sym_diff(current, make_set(std::move(toggled)));
    return true;
}

void require_same_ground(const Matroid& m1, const Matroid& m2) {
    if (m1.ground() != m2.ground())
        throw InputError("matroid intersection requires a common ground set");
}

}  // namespace

ElemSet max_common_independent(const Matroid& m1, const Matroid& m2) {
    require_same_ground(m1, m2);
    WeightFunction unit = WeightFunction::ones(
        m1.ground().empty() ? 0 : m1.ground().back() + 1);
    ElemSet current;
    while (augment(m1, m2, unit, current)) {
    }
    assert(m1.is_independent(current) && m2.is_independent(current));
    return current;
}

ElemSet max_weight_common_independent(const Matroid& m1, const Matroid& m2,
                                      const WeightFunction& w) {
    require_same_ground(m1, m2);
    ElemSet current;
    ElemSet best;
    Weight best_weight = 0;
    while (augment(m1, m2, w, current)) {
        Weight weight = w.of(current);
        if (weight > best_weight) {
            best_weight = weight;
            best = current;
        }
    }
    assert(m1.is_independent(best) && m2.is_independent(best));
    return best;
}

}  // namespace diversol
