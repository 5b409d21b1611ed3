#include "diversol/wdb.hpp"

#include <algorithm>
#include <cassert>

#include "diversol/optim.hpp"

namespace diversol {

namespace {

Weight half_up(Weight d) { return (d + 1) / 2; }

// Splits X into k parts, the first k-1 of size exactly `part`, the last one
// taking the rest. Requires |X| >= k*part.
std::vector<ElemSet> split_parts(const ElemSet& x, int k, Weight part) {
    std::vector<ElemSet> parts(static_cast<std::size_t>(k));
    std::size_t pos = 0;
    for (int i = 0; i < k - 1; ++i) {
        for (Weight j = 0; j < part; ++j) parts[static_cast<std::size_t>(i)].push_back(x[pos++]);
    }
    while (pos < x.size()) parts.back().push_back(x[pos++]);
    return parts;
}

}  // namespace

void validate(const WdbInstance& inst) {
    if (!inst.matroid) throw InputError("missing matroid");
    if (inst.k < 1) throw InputError("need k >= 1");
    if (inst.d < 0) throw InputError("need d >= 0");
    for (int e : inst.matroid->ground()) inst.weights.of(e);  // range-checks
}

std::optional<DiverseWitness> ind_coind_shortcut(const WdbInstance& inst) {
    validate(inst);
    const Matroid& m = *inst.matroid;
    ElemSet x = max_common_independent(m, DualView(inst.matroid));
    const Weight need = static_cast<Weight>(inst.k) * half_up(inst.d);
    if (static_cast<Weight>(x.size()) < need) return std::nullopt;

    std::vector<ElemSet> parts = split_parts(x, inst.k, half_up(inst.d));
    std::vector<ElemSet> bases;
    bases.reserve(parts.size());
    for (const ElemSet& part : parts)
        bases.push_back(m.extend_to_basis(part, set_diff(x, part)));
    DiverseWitness witness = make_witness(std::move(bases), inst.weights);
    VerifyResult check = verify_wdb(m, inst.weights, inst.k, inst.d, witness.sets);
    if (!check.ok) throw ContractError("shortcut witness failed verification: " + check.failure);
    return witness;
}

CompressResult compress(const WdbInstance& inst) {
    validate(inst);
    CompressResult result;
    result.already_yes = ind_coind_shortcut(inst);
    if (result.already_yes) return result;

    const MatroidPtr& m = inst.matroid;
    const ElemSet& ground = m->ground();
    const Weight rounds = half_up(inst.d) * inst.k * inst.k;

    // Primal phase: fix the ascending-id greedy basis B, then stack the
    // maximum-weight bases of M - S_{i-1} for `rounds` iterations.
    ElemSet base_basis = m->max_independent_subset(ground);
    ElemSet kept = base_basis;
    for (Weight i = 0; i < rounds; ++i) {
        ElemSet rest = set_diff(ground, kept);
        if (rest.empty()) break;
        GreedyBasisResult layer = greedy_max_weight_basis(*make_deleted(m, kept), inst.weights, rest);
        if (layer.basis.empty()) break;  // only loops remain
        kept = set_union(kept, layer.basis);
    }

    // Dual phase on the restriction to `kept`, starting from its cobasis
    // kept \ B; the same sweep in the dual collects S*.
    MatroidPtr restricted = make_deleted(m, set_diff(ground, kept));
    MatroidPtr restricted_dual = make_dual(restricted);
    ElemSet l_set = set_diff(kept, base_basis);
    ElemSet sstar = l_set;
    for (Weight i = 0; i < rounds; ++i) {
        ElemSet rest = set_diff(kept, sstar);
        if (rest.empty()) break;
        GreedyBasisResult layer =
            greedy_max_weight_basis(*make_deleted(restricted_dual, sstar), inst.weights, rest);
        if (layer.basis.empty()) break;
        sstar = set_union(sstar, layer.basis);
    }

    result.contracted = set_diff(base_basis, sstar);
    result.compressed = make_minor(m, set_diff(ground, kept), result.contracted);
    result.sstar = sstar;
    result.trace_upper = l_set;
    result.trace_lower = set_diff(sstar, l_set);
    result.kept = kept;
    result.start_basis = base_basis;
    assert(result.compressed->ground() == sstar);

    const Weight bound = 2 * half_up(inst.d) * half_up(inst.d) * inst.k * inst.k * inst.k;
    if (static_cast<Weight>(sstar.size()) > bound)
        throw ContractError("compressed ground set exceeds the size bound");
    return result;
}

namespace {

// Candidate bases of the compressed matroid: every basis leaves at most
// ceil(d/2)*k of L* out and takes at most ceil(d/2)*k of L, so the pairs
// (A subset of L, D subset of L*) within those caps enumerate them all.
std::vector<ElemSet> candidate_bases(const Matroid& compressed, const ElemSet& l_set,
                                     const ElemSet& lstar, Weight cap,
                                     const SearchLimits& limits) {
    const int rank = compressed.rank();
    std::vector<ElemSet> candidates;

    const int max_a = static_cast<int>(std::min<Weight>(cap, static_cast<Weight>(l_set.size())));
    const int max_d = static_cast<int>(std::min<Weight>(cap, static_cast<Weight>(lstar.size())));
    long long examined = 0;
    for (int asize = 0; asize <= max_a; ++asize) {
        for_each_combination(static_cast<int>(l_set.size()), asize, [&](const std::vector<int>& ai) {
            ElemSet a;
            a.reserve(ai.size());
            for (int i : ai) a.push_back(l_set[static_cast<std::size_t>(i)]);
            for (int dsize = 0; dsize <= max_d; ++dsize) {
                for_each_combination(
                    static_cast<int>(lstar.size()), dsize, [&](const std::vector<int>& di) {
                        if (++examined > limits.max_candidates)
                            throw BudgetError("candidate-basis enumeration exceeded max_candidates");
                        ElemSet dropped;
                        dropped.reserve(di.size());
                        for (int i : di) dropped.push_back(lstar[static_cast<std::size_t>(i)]);
                        ElemSet candidate = set_union(set_diff(lstar, dropped), a);
                        if (static_cast<int>(candidate.size()) != rank) return;
                        if (!compressed.is_independent(candidate)) return;
                        candidates.push_back(std::move(candidate));
                    });
            }
        });
    }
    // The (A, D) scheme is injective, so this dedup is a guard that never fires.
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    return candidates;
}

// Pruned multiset DFS over candidates; counts visited nodes against the
// tuple budget.
std::optional<std::vector<ElemSet>> diverse_tuple(const std::vector<ElemSet>& candidates, int k,
                                                  Weight d, const WeightFunction& w,
                                                  const SearchLimits& limits) {
    std::vector<int> chosen;
    std::optional<std::vector<ElemSet>> found;
    long long visited = 0;
    auto rec = [&](auto&& self, int from) -> bool {
        if (static_cast<int>(chosen.size()) == k) {
            std::vector<ElemSet> sets;
            for (int idx : chosen) sets.push_back(candidates[static_cast<std::size_t>(idx)]);
            found = std::move(sets);
            return true;
        }
        for (int i = from; i < static_cast<int>(candidates.size()); ++i) {
            if (++visited > limits.max_tuples)
                throw BudgetError("k-tuple search exceeded max_tuples");
            bool compatible = true;
            for (int idx : chosen)
                if (w.of(sym_diff(candidates[static_cast<std::size_t>(idx)],
                                  candidates[static_cast<std::size_t>(i)])) < d) {
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
    return found;
}

}  // namespace

WdbAnswer solve_wdb(const WdbInstance& inst, const SearchLimits& limits) {
    validate(inst);
    const Matroid& m = *inst.matroid;

    // k = 1 and d = 0 are vacuous: k copies of one basis.
    if (inst.k == 1 || inst.d == 0) {
        ElemSet basis = m.max_independent_subset(m.ground());
        std::vector<ElemSet> sets(static_cast<std::size_t>(inst.k), basis);
        WdbAnswer answer;
        answer.yes = true;
        answer.witness = make_witness(std::move(sets), inst.weights);
        return answer;
    }

    CompressResult compressed = compress(inst);
    if (compressed.already_yes) {
        WdbAnswer answer;
        answer.yes = true;
        answer.witness = std::move(compressed.already_yes);
        return answer;
    }

    const Weight cap = half_up(inst.d) * inst.k;
    std::vector<ElemSet> candidates = candidate_bases(
        *compressed.compressed, compressed.trace_upper, compressed.trace_lower, cap, limits);
    auto tuple = diverse_tuple(candidates, inst.k, inst.d, inst.weights, limits);
    if (!tuple) return WdbAnswer{};

    // Lift: re-add the contracted elements; those are bases of the input.
    std::vector<ElemSet> lifted;
    lifted.reserve(tuple->size());
    for (const ElemSet& basis : *tuple) lifted.push_back(set_union(basis, compressed.contracted));
    DiverseWitness witness = make_witness(std::move(lifted), inst.weights);
    VerifyResult check = verify_wdb(m, inst.weights, inst.k, inst.d, witness.sets);
    if (!check.ok) throw ContractError("solve_wdb witness failed verification: " + check.failure);
    WdbAnswer answer;
    answer.yes = true;
    answer.witness = std::move(witness);
    return answer;
}

WdbKernel kernelize_linear(const LinearMatroid& m, const WeightFunction& w, int k, Weight d) {
    auto shared = std::make_shared<LinearMatroid>(m);
    WdbInstance inst{shared, w, k, d};
    validate(inst);

    WdbKernel kernel;
    kernel.k = k;
    kernel.d = d;

    // k = 1 or d = 0 is always yes; so is a fired shortcut.
    bool trivial = (k == 1 || d == 0);
    CompressResult compressed;
    if (!trivial) {
        compressed = compress(inst);
        trivial = !compressed.compressed_instance();
    }
    if (trivial) {
        // Canonical trivial yes-instance over the same field: one nonzero
        // column, weight one, k = 1, d = 0.
        kernel.trivial_yes = true;
        kernel.matrix = ModMatrix({{1}}, m.matrix().modulus());
        kernel.weights = {1};
        kernel.k = 1;
        kernel.d = 0;
        kernel.columns = {0};
        return kernel;
    }

    // Representation of the compressed matroid: delete the columns dropped by
    // the primal phase, then contract B \ S*. Column ids keep ascending order.
    ModMatrix after_delete = m.matrix().select_columns(compressed.kept);
    std::vector<int> contract_positions;
    for (std::size_t i = 0; i < compressed.kept.size(); ++i)
        if (set_contains(compressed.contracted, compressed.kept[i]))
            contract_positions.push_back(static_cast<int>(i));
    ModMatrix contracted = after_delete.contract_columns(contract_positions);
    kernel.matrix = contracted.rref_nonzero_rows();
    kernel.columns = compressed.sstar;
    kernel.weights.reserve(kernel.columns.size());
    for (int e : kernel.columns) kernel.weights.push_back(std::min(w.of(e), d));
    return kernel;
}

}  // namespace diversol
