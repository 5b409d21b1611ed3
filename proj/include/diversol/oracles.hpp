#ifndef DIVERSOL_ORACLES_HPP
#define DIVERSOL_ORACLES_HPP

#include <optional>

#include "diversol/graph.hpp"
#include "diversol/matroid.hpp"
#include "diversol/weights.hpp"
#include "diversol/witness.hpp"

namespace diversol {

// Brute-force reference solvers. Exhaustive and exact within their size caps;
// they certify the FPT solvers on small instances.

struct OracleCaps {
    int max_ground = 12;
    int max_vertices = 14;
    int max_k = 4;
};

std::vector<ElemSet> enumerate_bases(const Matroid& m, int max_ground = 12);
std::vector<ElemSet> enumerate_common_independent_sets(const Matroid& m1, const Matroid& m2,
                                                       int max_ground = 12);

std::optional<DiverseWitness> brute_force_wdb(const Matroid& m, const WeightFunction& w, int k,
                                              Weight d, const OracleCaps& caps = {});
std::optional<DiverseWitness> brute_force_wdcis(const Matroid& m1, const Matroid& m2,
                                                const WeightFunction& w, int k, Weight d,
                                                const OracleCaps& caps = {});
std::optional<DiverseWitness> brute_force_dpm(const Graph& g, int k, Weight d,
                                              const OracleCaps& caps = {});

// Uniform-matroid instances encoding a 3-partition question: U_{3n}^3 with
// the multiset as weights, k = n, d = 2b. Valid for both the diverse-bases
// and the diverse-common-independent-sets problems.
struct ThreePartitionReduction {
    int ground_size;      // 3n
    int rank = 3;         // U_{3n}^3
    std::vector<Weight> weights;
    int k;                // n
    Weight d;             // 2b
};

ThreePartitionReduction reduction_3partition(Weight b, const std::vector<Weight>& s);

// Direct exhaustive 3-partition decision (partition into triples summing to b).
bool solve_3partition(Weight b, const std::vector<Weight>& s);

}  // namespace diversol

#endif
