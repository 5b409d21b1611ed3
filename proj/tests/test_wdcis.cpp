#include "doctest.h"

#include "diversol/optim.hpp"
#include "diversol/oracles.hpp"
#include "diversol/wdcis.hpp"
#include "test_util.hpp"

using namespace diversol;

namespace {

WdcisInstance uniform_pair(int n, int r1, int r2, std::vector<Weight> w, int k, Weight d) {
    return WdcisInstance{make_uniform(n, r1), make_uniform(n, r2), WeightFunction(std::move(w)), k,
                         d};
}

WdcisInstance random_instance(Rng& rng, int trial) {
    int n = 4 + static_cast<int>(rng.below(5));  // up to 8
    MatroidPtr m1 = testutil::random_matroid(rng, n, trial);
    MatroidPtr m2 = testutil::random_matroid(rng, n, trial + 1);
    WeightFunction w = testutil::random_weights(rng, n, 5);
    int k = 1 + static_cast<int>(rng.below(3));
    Weight d = static_cast<Weight>(rng.below(5));
    return WdcisInstance{m1, m2, w, k, d};
}

// All k-multisets of common independent sets forming a solution, capped.
std::vector<std::vector<ElemSet>> all_solutions(const WdcisInstance& inst,
                                                const WeightFunction& weights, int cap) {
    std::vector<ElemSet> candidates = enumerate_common_independent_sets(*inst.m1, *inst.m2);
    std::vector<std::vector<ElemSet>> solutions;
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(solutions.size()) >= cap) return;
        if (static_cast<int>(chosen.size()) == inst.k) {
            std::vector<ElemSet> sets;
            for (int idx : chosen) sets.push_back(candidates[static_cast<std::size_t>(idx)]);
            solutions.push_back(std::move(sets));
            return;
        }
        for (int i = from; i < static_cast<int>(candidates.size()); ++i) {
            bool compatible = true;
            for (int idx : chosen)
                if (weights.of(sym_diff(candidates[static_cast<std::size_t>(idx)],
                                        candidates[static_cast<std::size_t>(i)])) < inst.d) {
                    compatible = false;
                    break;
                }
            if (!compatible) continue;
            chosen.push_back(i);
            self(self, i);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return solutions;
}

}  // namespace

TEST_CASE("big common independent set shortcut") {
    CHECK(!big_cis_shortcut(uniform_pair(6, 3, 3, std::vector<Weight>(6, 1), 2, 3)).has_value());
    auto witness = big_cis_shortcut(uniform_pair(6, 3, 3, std::vector<Weight>(6, 1), 2, 2));
    REQUIRE(witness.has_value());
    CHECK(witness->min_pairwise >= 2);
    CHECK(!big_cis_shortcut(uniform_pair(4, 1, 1, std::vector<Weight>(4, 1), 2, 3)).has_value());
}

TEST_CASE("family contains the empty set at target weight zero") {
    WdcisInstance inst = uniform_pair(4, 2, 2, std::vector<Weight>(4, 1), 2, 2);
    const int s = static_cast<int>(max_common_independent(*inst.m1, *inst.m2).size());
    CandidateFamily family = build_family(inst, inst.weights.truncated(inst.d), s);
    REQUIRE(!family.per_weight.empty());
    bool has_empty = false;
    for (const ElemSet& member : family.per_weight[0])
        if (member.empty()) has_empty = true;
    CHECK(has_empty);
}

TEST_CASE("family members are common independent sets of the stated weight") {
    Rng rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        WdcisInstance inst = random_instance(rng, trial);
        if (inst.d == 0 || inst.k == 1) continue;
        if (big_cis_shortcut(inst).has_value()) continue;
        const int s = static_cast<int>(max_common_independent(*inst.m1, *inst.m2).size());
        WeightFunction truncated = inst.weights.truncated(inst.d);
        CandidateFamily family = build_family(inst, truncated, s);
        for (Weight w = 0; w < static_cast<Weight>(family.per_weight.size()); ++w)
            for (const ElemSet& member : family.per_weight[static_cast<std::size_t>(w)]) {
                CHECK(inst.m1->is_independent(member));
                CHECK(inst.m2->is_independent(member));
                CHECK(truncated.of(member) >= w);
            }
    }
}

TEST_CASE("replacement property on the uniform pair example") {
    WdcisInstance inst = uniform_pair(4, 2, 2, std::vector<Weight>(4, 1), 2, 2);
    const int s = static_cast<int>(max_common_independent(*inst.m1, *inst.m2).size());
    WeightFunction truncated = inst.weights.truncated(inst.d);
    CandidateFamily family = build_family(inst, truncated, s);

    for (const auto& solution : all_solutions(inst, truncated, 200)) {
        for (std::size_t i = 0; i < solution.size(); ++i) {
            Weight w = truncated.of(solution[i]);
            bool replaceable = false;
            for (const ElemSet& candidate : family.per_weight[static_cast<std::size_t>(w)]) {
                bool still_solution = true;
                for (std::size_t j = 0; j < solution.size() && still_solution; ++j) {
                    if (j == i) continue;
                    if (truncated.of(sym_diff(candidate, solution[j])) < inst.d)
                        still_solution = false;
                }
                if (still_solution) {
                    replaceable = true;
                    break;
                }
            }
            CHECK(replaceable);
        }
    }
}

TEST_CASE("solver matches the stated examples") {
    CHECK(solve_wdcis(uniform_pair(6, 3, 3, std::vector<Weight>(6, 1), 2, 6)).yes);
    CHECK(!solve_wdcis(uniform_pair(4, 1, 1, std::vector<Weight>(4, 1), 2, 3)).yes);
    CHECK(solve_wdcis(uniform_pair(6, 3, 3, {6, 6, 8, 7, 7, 6}, 2, 40)).yes);
}

TEST_CASE("solver agrees with brute force on random instances") {
    Rng rng(42);
    for (int trial = 0; trial < 120; ++trial) {
        WdcisInstance inst = random_instance(rng, trial);
        WdcisAnswer fast = solve_wdcis(inst);
        auto slow = brute_force_wdcis(*inst.m1, *inst.m2, inst.weights, inst.k, inst.d);
        CHECK(fast.yes == slow.has_value());
        if (fast.yes)
            CHECK(verify_wdcis(*inst.m1, *inst.m2, inst.weights, inst.k, inst.d,
                               fast.witness->sets)
                      .ok);
    }
}

TEST_CASE("weight truncation never changes the answer") {
    Rng rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        WdcisInstance inst = random_instance(rng, trial);
        if (inst.d < 1) continue;
        CHECK(brute_force_wdcis(*inst.m1, *inst.m2, inst.weights, inst.k, inst.d).has_value() ==
              brute_force_wdcis(*inst.m1, *inst.m2, inst.weights.truncated(inst.d), inst.k,
                                inst.d)
                  .has_value());
    }
}

TEST_CASE("family construction respects its node budget") {
    SearchLimits limits;
    limits.max_family_nodes = 1;
    WdcisInstance inst = uniform_pair(8, 2, 2, std::vector<Weight>(8, 1), 3, 4);
    const int s = static_cast<int>(max_common_independent(*inst.m1, *inst.m2).size());
    CHECK_THROWS_AS(build_family(inst, inst.weights.truncated(inst.d), s, limits), BudgetError);
}
