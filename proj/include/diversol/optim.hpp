#ifndef DIVERSOL_OPTIM_HPP
#define DIVERSOL_OPTIM_HPP

#include "diversol/matroid.hpp"
#include "diversol/weights.hpp"

namespace diversol {

struct GreedyBasisResult {
    ElemSet basis;
    std::vector<int> pick_order;  // elements in the order the greedy added them
    Weight weight = 0;
};

// Maximum-weight basis of M restricted to `restrict` (deletion of the rest).
// Ties broken by ascending element id, so the pick order is deterministic.
GreedyBasisResult greedy_max_weight_basis(const Matroid& m, const WeightFunction& w,
                                          const ElemSet& restrict_to);

inline GreedyBasisResult greedy_max_weight_basis(const Matroid& m, const WeightFunction& w) {
    return greedy_max_weight_basis(m, w, m.ground());
}

// Maximum-cardinality common independent set of two matroids on the same
// ground set, by augmenting paths in the exchange graph.
ElemSet max_common_independent(const Matroid& m1, const Matroid& m2);

// Maximum-weight common independent set (any cardinality). Augmenting paths
// are chosen lexicographically by (node-cost sum, arc count), which keeps
// every intermediate set extreme.
ElemSet max_weight_common_independent(const Matroid& m1, const Matroid& m2,
                                      const WeightFunction& w);

}  // namespace diversol

#endif
