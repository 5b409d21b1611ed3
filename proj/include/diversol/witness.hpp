#ifndef DIVERSOL_WITNESS_HPP
#define DIVERSOL_WITNESS_HPP

#include <string>
#include <vector>

#include "diversol/matroid.hpp"
#include "diversol/weights.hpp"

namespace diversol {

class Graph;

// A claimed diverse solution: k element sets plus the verification record of
// all pairwise symmetric-difference weights.
struct DiverseWitness {
    std::vector<ElemSet> sets;
    // One entry per unordered pair {i, j}, i < j, in lexicographic order.
    struct PairWeight {
        int i;
        int j;
        Weight weight;
    };
    std::vector<PairWeight> pairwise;
    Weight min_pairwise = 0;  // meaningful when sets.size() >= 2
};

struct VerifyResult {
    bool ok = true;
    std::string failure;  // names the offending set or pair
};

// Fills in the pairwise table of `w` (weights of symmetric differences).
void fill_pairwise(DiverseWitness& w, const WeightFunction& weights);
// Unweighted variant: pairwise symmetric-difference cardinalities.
void fill_pairwise_cardinality(DiverseWitness& w);

// The verifiers below are the single source of truth for what counts as a
// solution; both the FPT solvers and the brute-force oracles go through them.
VerifyResult verify_wdb(const Matroid& m, const WeightFunction& w, int k, Weight d,
                        const std::vector<ElemSet>& sets);
VerifyResult verify_wdcis(const Matroid& m1, const Matroid& m2, const WeightFunction& w, int k,
                          Weight d, const std::vector<ElemSet>& sets);
VerifyResult verify_dpm(const Graph& g, int k, Weight d, const std::vector<ElemSet>& matchings);

DiverseWitness make_witness(std::vector<ElemSet> sets, const WeightFunction& weights);
DiverseWitness make_witness_cardinality(std::vector<ElemSet> sets);

}  // namespace diversol

#endif
