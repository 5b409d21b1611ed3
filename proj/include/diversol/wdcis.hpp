#ifndef DIVERSOL_WDCIS_HPP
#define DIVERSOL_WDCIS_HPP

#include <optional>

#include "diversol/matroid.hpp"
#include "diversol/wdb.hpp"
#include "diversol/weights.hpp"
#include "diversol/witness.hpp"

namespace diversol {

// Weighted diverse common independent sets: k sets, each independent in both
// matroids, pairwise symmetric-difference weight >= d.
struct WdcisInstance {
    MatroidPtr m1;
    MatroidPtr m2;
    WeightFunction weights;
    int k = 1;
    Weight d = 0;
};

void validate(const WdcisInstance& inst);

// Candidate replacement family: union over target weights w of the families
// F_w produced by the recursive branching algorithm. Every member is a common
// independent set; every member of F_w weighs at least w (truncated weights).
struct CandidateFamily {
    std::vector<ElemSet> all;                      // deduplicated, sorted
    std::vector<std::vector<ElemSet>> per_weight;  // index w in 0..d*s
};

// Shortcut: a common independent set of size >= k*ceil(d/2) splits into a
// witness directly.
std::optional<DiverseWitness> big_cis_shortcut(const WdcisInstance& inst);

// The recursive branching construction. `truncated` must already be capped at
// d and `s` must be the maximum size of a common independent set with
// s < k*ceil(d/2) (otherwise the shortcut applies).
CandidateFamily build_family(const WdcisInstance& inst, const WeightFunction& truncated, int s,
                             const SearchLimits& limits = {});

struct WdcisAnswer {
    bool yes = false;
    std::optional<DiverseWitness> witness;
};

WdcisAnswer solve_wdcis(const WdcisInstance& inst, const SearchLimits& limits = {});

}  // namespace diversol

#endif
