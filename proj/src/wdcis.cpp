#include "diversol/wdcis.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "diversol/optim.hpp"

namespace diversol {

namespace {

Weight half_up(Weight d) { return (d + 1) / 2; }

}  // namespace

void validate(const WdcisInstance& inst) {
    if (!inst.m1 || !inst.m2) throw InputError("missing matroid");
    if (inst.m1->ground() != inst.m2->ground())
        throw InputError("the two matroids need a common ground set");
    if (inst.k < 1) throw InputError("need k >= 1");
    if (inst.d < 0) throw InputError("need d >= 0");
    for (int e : inst.m1->ground()) inst.weights.of(e);
}

std::optional<DiverseWitness> big_cis_shortcut(const WdcisInstance& inst) {
    validate(inst);
    ElemSet x = max_common_independent(*inst.m1, *inst.m2);
    const Weight need = static_cast<Weight>(inst.k) * half_up(inst.d);
    if (static_cast<Weight>(x.size()) < need) return std::nullopt;

    // First k-1 parts of size exactly ceil(d/2); the last takes the rest.
    std::vector<ElemSet> parts(static_cast<std::size_t>(inst.k));
    std::size_t pos = 0;
    for (int i = 0; i < inst.k - 1; ++i)
        for (Weight j = 0; j < half_up(inst.d); ++j)
            parts[static_cast<std::size_t>(i)].push_back(x[pos++]);
    while (pos < x.size()) parts.back().push_back(x[pos++]);

    DiverseWitness witness = make_witness(std::move(parts), inst.weights);
    VerifyResult check = verify_wdcis(*inst.m1, *inst.m2, inst.weights, inst.k, inst.d, witness.sets);
    if (!check.ok) throw ContractError("shortcut witness failed verification: " + check.failure);
    return witness;
}

namespace {

struct FamilyBuilder {
    const WdcisInstance& inst;
    const WeightFunction& truncated;
    int s;
    const SearchLimits& limits;

    Weight target = 0;
    long long nodes = 0;
    std::vector<ElemSet>* out = nullptr;

    void run(Weight w, std::vector<ElemSet>& sink) {
        target = w;
        out = &sink;
        recurse({}, inst.m1, inst.m2, 0);
    }

    void recurse(const ElemSet& x, MatroidPtr m1, MatroidPtr m2, int depth) {
        if (++nodes > limits.max_family_nodes)
            throw BudgetError("family construction exceeded max_family_nodes");
        assert(depth <= s);

        // Step 1: X itself is heavy enough.
        if (truncated.of(x) >= target) {
            out->push_back(x);
            return;
        }
        const Weight remaining = target - truncated.of(x);
        const int quota = inst.k * s;

        // Step 2: greedily peel disjoint common independent sets of weight
        // >= remaining from the current minors.
        std::vector<ElemSet> layers;
        ElemSet peeled;
        while (static_cast<int>(layers.size()) < quota) {
            MatroidPtr m1_rest = make_deleted(m1, peeled);
            MatroidPtr m2_rest = make_deleted(m2, peeled);
            ElemSet z = max_weight_common_independent(*m1_rest, *m2_rest, truncated);
            if (truncated.of(z) < remaining) break;
            peeled = set_union(peeled, z);
            layers.push_back(std::move(z));
        }

        // Step 3.
        if (layers.empty()) return;
        if (static_cast<int>(layers.size()) == quota) {
            for (const ElemSet& layer : layers) out->push_back(set_union(x, layer));
            return;
        }
        const ElemSet& r = peeled;
        if (r.size() > 24)
            throw BudgetError("branching set too large (" + std::to_string(r.size()) +
                              " elements) for subset enumeration");
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r.size()); ++mask) {
            ElemSet z = subset_from_mask(r, mask);
            if (static_cast<int>(z.size()) + static_cast<int>(x.size()) > s) continue;
            if (!m1->is_independent(z) || !m2->is_independent(z)) continue;
            ElemSet w_del = set_diff(r, z);
            recurse(set_union(x, z), make_minor(m1, w_del, z), make_minor(m2, w_del, z),
                    depth + 1);
        }
    }
};

}  // namespace

CandidateFamily build_family(const WdcisInstance& inst, const WeightFunction& truncated, int s,
                             const SearchLimits& limits) {
    validate(inst);
    CandidateFamily family;
    const Weight max_weight = inst.d * static_cast<Weight>(s);
    family.per_weight.resize(static_cast<std::size_t>(max_weight) + 1);

    FamilyBuilder builder{inst, truncated, s, limits};
    std::set<ElemSet> dedup;
    for (Weight w = 0; w <= max_weight; ++w) {
        std::vector<ElemSet> raw;
        builder.run(w, raw);
        auto& bucket = family.per_weight[static_cast<std::size_t>(w)];
        std::set<ElemSet> bucket_dedup;
        for (ElemSet& member : raw) {
            assert(inst.m1->is_independent(member) && inst.m2->is_independent(member));
            assert(truncated.of(member) >= w);
            if (bucket_dedup.insert(member).second) bucket.push_back(member);
            dedup.insert(std::move(member));
        }
    }
    family.all.assign(dedup.begin(), dedup.end());
    return family;
}

WdcisAnswer solve_wdcis(const WdcisInstance& inst, const SearchLimits& limits) {
    validate(inst);

    if (inst.k == 1 || inst.d == 0) {
        ElemSet one = max_common_independent(*inst.m1, *inst.m2);
        std::vector<ElemSet> sets(static_cast<std::size_t>(inst.k), one);
        WdcisAnswer answer;
        answer.yes = true;
        answer.witness = make_witness(std::move(sets), inst.weights);
        return answer;
    }

    std::optional<DiverseWitness> shortcut = big_cis_shortcut(inst);
    if (shortcut) {
        WdcisAnswer answer;
        answer.yes = true;
        answer.witness = std::move(shortcut);
        return answer;
    }

    const int s = static_cast<int>(max_common_independent(*inst.m1, *inst.m2).size());
    const WeightFunction truncated = inst.weights.truncated(inst.d);
    CandidateFamily family = build_family(inst, truncated, s, limits);

    // Pruned multiset search over the family, under truncated weights; the
    // final witness re-verifies under the original ones.
    std::vector<int> chosen;
    std::optional<std::vector<ElemSet>> found;
    long long visited = 0;
    auto rec = [&](auto&& self, int from) -> bool {
        if (static_cast<int>(chosen.size()) == inst.k) {
            std::vector<ElemSet> sets;
            for (int idx : chosen) sets.push_back(family.all[static_cast<std::size_t>(idx)]);
            found = std::move(sets);
            return true;
        }
        for (int i = from; i < static_cast<int>(family.all.size()); ++i) {
            if (++visited > limits.max_tuples)
                throw BudgetError("k-tuple search exceeded max_tuples");
            bool compatible = true;
            for (int idx : chosen)
                if (truncated.of(sym_diff(family.all[static_cast<std::size_t>(idx)],
                                          family.all[static_cast<std::size_t>(i)])) < inst.d) {
                    compatible = false;
                    break;
                }
            if (!compatible) continue;
            chosen.push_back(i);
            if (self(self, i)) return true;
            chosen.pop_back();
        }
        return false;
    };
    rec(rec, 0);
    if (!found) return WdcisAnswer{};

    DiverseWitness witness = make_witness(std::move(*found), inst.weights);
    VerifyResult check = verify_wdcis(*inst.m1, *inst.m2, inst.weights, inst.k, inst.d, witness.sets);
    if (!check.ok) throw ContractError("solve_wdcis witness failed verification: " + check.failure);
    WdcisAnswer answer;
    answer.yes = true;
    answer.witness = std::move(witness);
    return answer;
}

}  // namespace diversol
