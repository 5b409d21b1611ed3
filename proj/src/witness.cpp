#include "diversol/witness.hpp"

#include <functional>

#include "diversol/graph.hpp"

namespace diversol {

namespace {

void fill_pairwise_by(DiverseWitness& w, const std::function<Weight(const ElemSet&)>& measure) {
    w.pairwise.clear();
    w.min_pairwise = 0;
    bool first = true;
    for (std::size_t i = 0; i < w.sets.size(); ++i)
        for (std::size_t j = i + 1; j < w.sets.size(); ++j) {
            Weight weight = measure(sym_diff(w.sets[i], w.sets[j]));
            w.pairwise.push_back({static_cast<int>(i), static_cast<int>(j), weight});
            if (first || weight < w.min_pairwise) w.min_pairwise = weight;
            first = false;
        }
}

}  // namespace

void fill_pairwise(DiverseWitness& w, const WeightFunction& weights) {
    fill_pairwise_by(w, [&](const ElemSet& diff) { return weights.of(diff); });
}

void fill_pairwise_cardinality(DiverseWitness& w) {
    fill_pairwise_by(w, [](const ElemSet& diff) { return static_cast<Weight>(diff.size()); });
}

DiverseWitness make_witness(std::vector<ElemSet> sets, const WeightFunction& weights) {
    DiverseWitness w;
    w.sets = std::move(sets);
    fill_pairwise(w, weights);
    return w;
}

DiverseWitness make_witness_cardinality(std::vector<ElemSet> sets) {
    DiverseWitness w;
    w.sets = std::move(sets);
    fill_pairwise_cardinality(w);
    return w;
}

namespace {

VerifyResult fail(std::string msg) { return VerifyResult{false, std::move(msg)}; }

VerifyResult check_pairwise(const std::vector<ElemSet>& sets,
                            const std::function<Weight(const ElemSet&)>& measure, Weight d) {
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            Weight weight = measure(sym_diff(sets[i], sets[j]));
            if (weight < d)
                return fail("pair (" + std::to_string(i) + "," + std::to_string(j) +
                            ") has symmetric-difference weight " + std::to_string(weight) +
                            " < d=" + std::to_string(d));
        }
    return VerifyResult{};
}

}  // namespace

VerifyResult verify_wdb(const Matroid& m, const WeightFunction& w, int k, Weight d,
                        const std::vector<ElemSet>& sets) {
    if (static_cast<int>(sets.size()) != k)
        return fail("expected " + std::to_string(k) + " sets, got " + std::to_string(sets.size()));
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (!m.is_basis(sets[i])) return fail("set " + std::to_string(i) + " is not a basis");
    return check_pairwise(sets, [&](const ElemSet& diff) { return w.of(diff); }, d);
}

VerifyResult verify_wdcis(const Matroid& m1, const Matroid& m2, const WeightFunction& w, int k,
                          Weight d, const std::vector<ElemSet>& sets) {
    if (static_cast<int>(sets.size()) != k)
        return fail("expected " + std::to_string(k) + " sets, got " + std::to_string(sets.size()));
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (!m1.is_independent(sets[i]))
            return fail("set " + std::to_string(i) + " is not independent in the first matroid");
        if (!m2.is_independent(sets[i]))
            return fail("set " + std::to_string(i) + " is not independent in the second matroid");
    }
    return check_pairwise(sets, [&](const ElemSet& diff) { return w.of(diff); }, d);
}

VerifyResult verify_dpm(const Graph& g, int k, Weight d, const std::vector<ElemSet>& matchings) {
    if (static_cast<int>(matchings.size()) != k)
        return fail("expected " + std::to_string(k) + " matchings, got " +
                    std::to_string(matchings.size()));
    for (std::size_t i = 0; i < matchings.size(); ++i)
        if (!g.is_perfect_matching(matchings[i]))
            return fail("set " + std::to_string(i) + " is not a perfect matching");
    return check_pairwise(
        matchings, [](const ElemSet& diff) { return static_cast<Weight>(diff.size()); }, d);
}

}  // namespace diversol
