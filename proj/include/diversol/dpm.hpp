#ifndef DIVERSOL_DPM_HPP
#define DIVERSOL_DPM_HPP

#include <optional>

#include "diversol/algebra.hpp"
#include "diversol/graph.hpp"
#include "diversol/rng.hpp"
#include "diversol/weights.hpp"
#include "diversol/witness.hpp"

namespace diversol {

// Total edge coloring used by the color-coding procedures.
struct EdgeColoring {
    std::vector<int> color;  // per edge id
    int palette = 0;
};

struct DpmBudgets {
    long long trial_cap = 128;        // per far/close call; the theoretical
                                      // ceil(3*e^(rs)) is used when smaller
    int repetitions = 30;             // independent end-to-end repetitions
    std::uint64_t sieve_call_cap = std::uint64_t{1} << 22;
    long long dp_state_cap = 2000000;
    long long tuple_cap = 200000;
};

struct DpmStats {
    long long far_trials = 0;
    long long close_trials = 0;
    long long determinant_evals = 0;
    int repetitions_used = 0;
};

// One-sided Monte Carlo perfect-matching test: a nonzero random evaluation of
// the Tutte determinant certifies a matching exists; "false" may err with
// probability at most (1/3)^trials.
bool has_perfect_matching_tutte(const Graph& g, std::uint64_t seed, int trials = 20);

// Labeled Tutte matrix bound to a field: per edge a variable and a label set;
// evaluation assigns field values to all variables.
struct LabeledTutte {
    const Graph* graph;
    std::vector<std::vector<int>> labels;  // per edge: label variable indices
    int num_label_vars = 0;

    int num_vars() const { return graph->num_edges() + num_label_vars; }
    // variable layout: edge e -> var e; label j -> var num_edges + j
    Gf2m::Elem evaluate_determinant(const Gf2m& field,
                                    const std::vector<Gf2m::Elem>& point) const;
};

// Procedure P1: one perfect matching far from all of `existing`
// (|M \ M_i| >= s for every i), by color coding over the labeled Tutte
// determinant and monomial-support extraction. Absent is not a proof of
// nonexistence.
std::optional<ElemSet> far_matching(const Graph& g, const std::vector<ElemSet>& existing, int s,
                                    const DpmBudgets& budgets, Rng& rng,
                                    DpmStats* stats = nullptr);

// DP core of procedure P2: a collection of vertex-disjoint alternating cycles
// whose edges carry exactly the distinct colors of `target_colors`.
std::optional<ElemSet> alternating_dp(const Graph& g, const ElemSet& matching,
                                      const std::vector<int>& target_colors,
                                      const EdgeColoring& coloring,
                                      long long dp_state_cap = 2000000);

// Procedure P2: r perfect matchings within distance s of `matching`, pairwise
// symmetric difference at least d.
std::optional<std::vector<ElemSet>> close_diverse_matchings(const Graph& g,
                                                            const ElemSet& matching, int r,
                                                            Weight d, Weight s,
                                                            const DpmBudgets& budgets, Rng& rng,
                                                            DpmStats* stats = nullptr);

struct DpmAnswer {
    bool yes = false;
    std::optional<DiverseWitness> witness;
    bool no_is_probabilistic = false;  // "no" from the randomized search, not a proof
    DpmStats stats;
};

// Two-phase solver: greedy far-apart matchings, then per-cluster close diverse
// matchings over all compositions of k. Yes answers are always certified.
DpmAnswer solve_dpm(const Graph& g, int k, Weight d, const DpmBudgets& budgets,
                    std::uint64_t seed);

}  // namespace diversol

#endif
