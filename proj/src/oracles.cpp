#include "diversol/oracles.hpp"

#include <algorithm>

namespace diversol {

namespace {

void require_ground(const Matroid& m, int cap, const char* what) {
    if (m.ground_size() > cap)
        throw BudgetError(std::string(what) + ": ground set exceeds brute-force cap of " +
                          std::to_string(cap));
}

// Multiset DFS over candidate sets (indices non-decreasing), pruning a partial
// tuple as soon as one pairwise weight drops below d.
template <typename Measure>
std::optional<std::vector<ElemSet>> find_diverse_tuple(const std::vector<ElemSet>& candidates,
                                                       int k, Weight d, Measure&& measure) {
    std::vector<int> chosen;
    std::optional<std::vector<ElemSet>> found;

    auto rec = [&](auto&& self, int from) -> bool {
        if (static_cast<int>(chosen.size()) == k) {
            std::vector<ElemSet> sets;
            sets.reserve(chosen.size());
            for (int idx : chosen) sets.push_back(candidates[static_cast<std::size_t>(idx)]);
            found = std::move(sets);
            return true;
        }
        for (int i = from; i < static_cast<int>(candidates.size()); ++i) {
            bool compatible = true;
            for (int idx : chosen) {
                if (measure(sym_diff(candidates[static_cast<std::size_t>(idx)],
                                     candidates[static_cast<std::size_t>(i)])) < d) {
                    compatible = false;
                    break;
                }
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

std::vector<ElemSet> enumerate_bases(const Matroid& m, int max_ground) {
    require_ground(m, max_ground, "enumerate_bases");
    const ElemSet& ground = m.ground();
    const int n = m.ground_size();
    const int r = m.rank();
    std::vector<ElemSet> bases;
    for_each_combination(n, r, [&](const std::vector<int>& idx) {
        ElemSet candidate;
        candidate.reserve(idx.size());
        for (int i : idx) candidate.push_back(ground[static_cast<std::size_t>(i)]);
        if (m.is_independent(candidate)) bases.push_back(std::move(candidate));
    });
    return bases;
}

std::vector<ElemSet> enumerate_common_independent_sets(const Matroid& m1, const Matroid& m2,
                                                       int max_ground) {
    if (m1.ground() != m2.ground())
        throw InputError("common independent sets need a common ground set");
    require_ground(m1, max_ground, "enumerate_common_independent_sets");
    const ElemSet& ground = m1.ground();
    const int n = m1.ground_size();
    std::vector<ElemSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        ElemSet s = subset_from_mask(ground, mask);
        if (m1.is_independent(s) && m2.is_independent(s)) out.push_back(std::move(s));
    }
    return out;
}

std::optional<DiverseWitness> brute_force_wdb(const Matroid& m, const WeightFunction& w, int k,
                                              Weight d, const OracleCaps& caps) {
    if (k < 1 || d < 0) throw InputError("need k >= 1 and d >= 0");
    if (k > caps.max_k) throw BudgetError("brute_force_wdb: k exceeds cap");
    std::vector<ElemSet> bases = enumerate_bases(m, caps.max_ground);
    auto tuple = find_diverse_tuple(bases, k, d,
                                    [&](const ElemSet& diff) { return w.of(diff); });
    if (!tuple) return std::nullopt;
    DiverseWitness witness = make_witness(std::move(*tuple), w);
    VerifyResult check = verify_wdb(m, w, k, d, witness.sets);
    if (!check.ok) throw ContractError("brute_force_wdb produced a bad witness: " + check.failure);
    return witness;
}

std::optional<DiverseWitness> brute_force_wdcis(const Matroid& m1, const Matroid& m2,
                                                const WeightFunction& w, int k, Weight d,
                                                const OracleCaps& caps) {
    if (k < 1 || d < 0) throw InputError("need k >= 1 and d >= 0");
    if (k > caps.max_k) throw BudgetError("brute_force_wdcis: k exceeds cap");
    std::vector<ElemSet> sets = enumerate_common_independent_sets(m1, m2, caps.max_ground);
    auto tuple = find_diverse_tuple(sets, k, d,
                                    [&](const ElemSet& diff) { return w.of(diff); });
    if (!tuple) return std::nullopt;
    DiverseWitness witness = make_witness(std::move(*tuple), w);
    VerifyResult check = verify_wdcis(m1, m2, w, k, d, witness.sets);
    if (!check.ok)
        throw ContractError("brute_force_wdcis produced a bad witness: " + check.failure);
    return witness;
}

std::optional<DiverseWitness> brute_force_dpm(const Graph& g, int k, Weight d,
                                              const OracleCaps& caps) {
    if (k < 1 || d < 0) throw InputError("need k >= 1 and d >= 0");
    if (k > caps.max_k) throw BudgetError("brute_force_dpm: k exceeds cap");
    std::vector<ElemSet> matchings = enumerate_perfect_matchings(g, caps.max_vertices);
    auto tuple = find_diverse_tuple(
        matchings, k, d, [](const ElemSet& diff) { return static_cast<Weight>(diff.size()); });
    if (!tuple) return std::nullopt;
    DiverseWitness witness = make_witness_cardinality(std::move(*tuple));
    VerifyResult check = verify_dpm(g, k, d, witness.sets);
    if (!check.ok) throw ContractError("brute_force_dpm produced a bad witness: " + check.failure);
    return witness;
}

ThreePartitionReduction reduction_3partition(Weight b, const std::vector<Weight>& s) {
    if (s.size() % 3 != 0 || s.empty())
        throw InputError("3-partition needs a multiset of 3n integers");
    const int n = static_cast<int>(s.size()) / 3;
    Weight total = 0;
    for (Weight x : s) {
        if (!(4 * x > b)) throw InputError("3-partition requires s_i > b/4 (violated by " +
                                           std::to_string(x) + ")");
        if (!(2 * x < b)) throw InputError("3-partition requires s_i < b/2 (violated by " +
                                           std::to_string(x) + ")");
        total += x;
    }
    if (total != static_cast<Weight>(n) * b)
        throw InputError("3-partition requires sum(S) = n*b; got sum " + std::to_string(total));
    ThreePartitionReduction red;
    red.ground_size = 3 * n;
    red.weights = s;
    red.k = n;
    red.d = 2 * b;
    return red;
}

namespace {

bool partition_rec(Weight b, const std::vector<Weight>& s, std::vector<bool>& used) {
    int first = -1;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!used[i]) {
            first = static_cast<int>(i);
            break;
        }
    if (first < 0) return true;
    used[static_cast<std::size_t>(first)] = true;
    for (std::size_t j = static_cast<std::size_t>(first) + 1; j < s.size(); ++j) {
        if (used[j]) continue;
        used[j] = true;
        for (std::size_t l = j + 1; l < s.size(); ++l) {
            if (used[l]) continue;
            if (s[static_cast<std::size_t>(first)] + s[j] + s[l] != b) continue;
            used[l] = true;
            if (partition_rec(b, s, used)) return true;
            used[l] = false;
        }
        used[j] = false;
    }
    used[static_cast<std::size_t>(first)] = false;
    return false;
}

}  // namespace

bool solve_3partition(Weight b, const std::vector<Weight>& s) {
    reduction_3partition(b, s);  // validates the preconditions
    std::vector<bool> used(s.size(), false);
    return partition_rec(b, s, used);
}

}  // namespace diversol
