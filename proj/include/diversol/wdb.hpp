#ifndef DIVERSOL_WDB_HPP
#define DIVERSOL_WDB_HPP

#include <optional>

#include "diversol/matroid.hpp"
#include "diversol/weights.hpp"
#include "diversol/witness.hpp"

namespace diversol {

// Weighted diverse bases: find k bases whose pairwise symmetric differences
// weigh at least d each.
struct WdbInstance {
    MatroidPtr matroid;
    WeightFunction weights;
    int k = 1;
    Weight d = 0;
};

void validate(const WdbInstance& inst);

struct SearchLimits {
    long long max_candidates = 200000;   // candidate bases of the compressed matroid
    long long max_tuples = 10000000;     // nodes of the pruned k-tuple search
    long long max_family_nodes = 2000000;  // recursion nodes of the family builder
};

// Outcome of the instance compression. Either the independent+coindependent
// shortcut certified a yes, or we hold an equivalent instance on the ground
// set sstar = L + lstar with |sstar| <= 2*ceil(d/2)^2*k^3.
struct CompressResult {
    std::optional<DiverseWitness> already_yes;

    MatroidPtr compressed;  // view on the original matroid, ground = sstar
    ElemSet sstar;
    ElemSet trace_upper;    // L: every basis B of the compressed matroid has
                            // |B & L| <= ceil(d/2)*k
    ElemSet trace_lower;    // L*: and |L* \ B| <= ceil(d/2)*k
    ElemSet contracted;     // B \ S*: re-added to lift bases back to the input
    ElemSet kept;           // S: ground set after the primal (deletion) phase
    ElemSet start_basis;    // the fixed basis B the construction started from

    bool compressed_instance() const { return !already_yes.has_value(); }
};

// Shortcut: a set of size >= k*ceil(d/2) that is independent and coindependent
// at once yields a witness directly.
std::optional<DiverseWitness> ind_coind_shortcut(const WdbInstance& inst);

// Two greedy sweeps (primal, then dual on the kept ground set) followed by a
// contraction; the result is an equivalent instance of bounded size.
CompressResult compress(const WdbInstance& inst);

struct WdbAnswer {
    bool yes = false;
    std::optional<DiverseWitness> witness;
};

// Exact decision. Budget overruns raise BudgetError instead of guessing.
WdbAnswer solve_wdb(const WdbInstance& inst, const SearchLimits& limits = {});

// Kernel for linearly represented instances: an equivalent instance whose
// matrix has at most 2*ceil(d/2)^2*k^3 columns and weights truncated at d.
// When the shortcut fires the canonical trivial yes-instance is emitted.
struct WdbKernel {
    bool trivial_yes = false;
    ModMatrix matrix;            // representation of the compressed matroid
    std::vector<Weight> weights; // truncated at d, aligned with the columns
    int k = 1;
    Weight d = 0;
    ElemSet columns;             // original element ids, ascending
};

WdbKernel kernelize_linear(const LinearMatroid& m, const WeightFunction& w, int k, Weight d);

}  // namespace diversol

#endif
