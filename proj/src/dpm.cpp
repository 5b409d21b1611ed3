#include "diversol/dpm.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <map>
#include <unordered_map>

namespace diversol {

Gf2m::Elem LabeledTutte::evaluate_determinant(const Gf2m& field,
                                              const std::vector<Gf2m::Elem>& point) const {
    const int n = graph->num_vertices();
    FieldMatrix m(n);
    for (int e = 0; e < graph->num_edges(); ++e) {
        Gf2m::Elem val = point[static_cast<std::size_t>(e)];
        if (val == 0) continue;
        for (int label : labels[static_cast<std::size_t>(e)]) {
            val = field.mul(val, point[static_cast<std::size_t>(graph->num_edges() + label)]);
            if (val == 0) break;
        }
        auto [u, v] = graph->edge(e);
        m.set(u, v, val);
        m.set(v, u, val);
    }
    return determinant(field, m);
}

bool has_perfect_matching_tutte(const Graph& g, std::uint64_t seed, int trials) {
    if (g.num_vertices() % 2 != 0) return false;
    LabeledTutte tutte{&g, std::vector<std::vector<int>>(static_cast<std::size_t>(g.num_edges())), 0};
    Gf2m field = Gf2m::with_min_size(3 * std::max(2, g.num_vertices()));
    Rng rng(derive_seed(seed, 0x7077));
    std::vector<Gf2m::Elem> point(static_cast<std::size_t>(g.num_edges()));
    for (int trial = 0; trial < trials; ++trial) {
        for (auto& x : point) x = field.random_element(rng);
        if (tutte.evaluate_determinant(field, point) != 0) return true;
    }
    return false;
}

namespace {

long long trial_budget(int rs, const DpmBudgets& budgets) {
    if (rs >= 20) return budgets.trial_cap;
    double theoretical = std::ceil(3.0 * std::exp(static_cast<double>(rs)));
    return std::min<long long>(budgets.trial_cap, static_cast<long long>(theoretical));
}

// Sieved identity test: Q = sum over subsets of the label variables of the
// determinant with those labels zeroed. Three independent random evaluations;
// a nonzero value certifies Q != 0.
struct SieveTester {
    const LabeledTutte& tutte;
    const Gf2m& field;
    std::vector<int> label_vars;  // absolute variable indices
    std::uint64_t call_cap;
    DpmStats* stats;

    bool identically_zero(const std::vector<bool>& zeroed_edges, Rng& rng) const {
        PointEvaluator eval = [&](const std::vector<Gf2m::Elem>& pt) {
            if (stats) ++stats->determinant_evals;
            return tutte.evaluate_determinant(field, pt);
        };
        for (int attempt = 0; attempt < 3; ++attempt) {
            std::vector<Gf2m::Elem> point(static_cast<std::size_t>(tutte.num_vars()));
            for (auto& x : point) x = field.random_element(rng);
            for (int e = 0; e < tutte.graph->num_edges(); ++e)
                if (zeroed_edges[static_cast<std::size_t>(e)]) point[static_cast<std::size_t>(e)] = 0;
            if (sieve_evaluate(field, eval, label_vars, std::move(point), call_cap) != 0)
                return false;
        }
        return true;
    }
};

}  // namespace

std::optional<ElemSet> far_matching(const Graph& g, const std::vector<ElemSet>& existing, int s,
                                    const DpmBudgets& budgets, Rng& rng, DpmStats* stats) {
    if (s < 0) throw InputError("far_matching needs s >= 0");
    for (const ElemSet& m : existing)
        if (!g.is_perfect_matching(m))
            throw ContractError("far_matching: the given sets must be perfect matchings");
    const int r = static_cast<int>(existing.size());
    const int n = g.num_vertices();
    const int m = g.num_edges();
    if (n % 2 != 0 || 2 * s > n) return std::nullopt;  // |M \ M_i| <= n/2 always

    const int num_labels = r * s;
    if (num_labels >= 63 || (num_labels > 0 && (std::uint64_t{1} << num_labels) > budgets.sieve_call_cap))
        return std::nullopt;  // sieve would blow the evaluation budget

    // Field sized for a union bound over the m+1 sieved identity tests; the
    // determinant degree is at most n * (1 + r).
    const std::uint64_t degree_bound =
        static_cast<std::uint64_t>(n) +
        static_cast<std::uint64_t>(r) * std::max<std::uint64_t>(static_cast<std::uint64_t>(n),
                                                                2 * static_cast<std::uint64_t>(s));
    Gf2m field = Gf2m::with_min_size(3 * static_cast<std::uint64_t>(m + 1) * std::max<std::uint64_t>(degree_bound, 2));

    std::vector<int> label_vars(static_cast<std::size_t>(num_labels));
    for (int j = 0; j < num_labels; ++j) label_vars[static_cast<std::size_t>(j)] = m + j;

    const long long trials = trial_budget(num_labels, budgets);
    for (long long trial = 0; trial < trials; ++trial) {
        if (stats) ++stats->far_trials;
        // One random coloring per existing matching: colors {0..s-1} on the
        // edges outside M_i; label variable of (i, c) is i*s + c.
        LabeledTutte tutte{&g, std::vector<std::vector<int>>(static_cast<std::size_t>(m)), num_labels};
        bool all_colors_used = true;
        if (s > 0) {
            std::vector<bool> used(static_cast<std::size_t>(num_labels), false);
            for (int i = 0; i < r; ++i)
                for (int e = 0; e < m; ++e) {
                    if (set_contains(existing[static_cast<std::size_t>(i)], e)) continue;
                    int c = rng.below_int(s);
                    tutte.labels[static_cast<std::size_t>(e)].push_back(i * s + c);
                    used[static_cast<std::size_t>(i * s + c)] = true;
                }
            for (bool u : used) all_colors_used = all_colors_used && u;
        }
        if (!all_colors_used) continue;  // some label variable appears nowhere

        SieveTester tester{tutte, field, label_vars, budgets.sieve_call_cap, stats};
        std::vector<bool> zeroed(static_cast<std::size_t>(m), false);
        if (tester.identically_zero(zeroed, rng)) continue;

        // Support extraction: zero the edge variables in ascending order and
        // keep exactly those whose zeroing kills the sieved polynomial.
        ElemSet support;
        for (int e = 0; e < m; ++e) {
            zeroed[static_cast<std::size_t>(e)] = true;
            if (tester.identically_zero(zeroed, rng)) {
                zeroed[static_cast<std::size_t>(e)] = false;
                support.push_back(e);
            }
        }
        if (!g.is_perfect_matching(support)) continue;
        bool far_enough = true;
        for (const ElemSet& mi : existing)
            if (static_cast<int>(set_diff(support, mi).size()) < s) {
                far_enough = false;
                break;
            }
        if (far_enough) return support;
    }
    return std::nullopt;
}

namespace {

// Sparse DP over color subsets. States:
//   closed[L]         — vertex-disjoint alternating cycle collections whose
//                        edges carry exactly the distinct colors L
//   open[L,u,tu,v,tv] — a closed collection plus one open alternating path
//                        from u to v; tu/tv say whether the path edge at that
//                        endpoint lies in the matching
// Paths start at a matching edge and grow at the v end; closing an edge into
// u demands alternation at both endpoints, which forces even cycles.
struct AlternatingDp {
    const Graph& g;
    const ElemSet& matching;
    const EdgeColoring& coloring;
    std::vector<int> used_colors;          // sorted distinct colors on edges
    std::vector<int> color_index;          // palette -> index in used_colors (or -1)
    int max_edges;                         // popcount cap for explored subsets
    long long state_cap;

    struct OpenInfo {
        std::uint64_t parent;  // open key, or closed mask when from_closed
        int edge;
        bool from_closed;
    };
    struct ClosedInfo {
        std::uint64_t open_key;
        int edge;
        bool root;
    };
    std::unordered_map<std::uint64_t, OpenInfo> open_info;
    std::unordered_map<std::uint64_t, ClosedInfo> closed_info;
    std::vector<std::vector<std::uint64_t>> open_by_level;
    std::vector<std::vector<std::uint64_t>> closed_by_level;
    bool aborted = false;

    AlternatingDp(const Graph& graph, const ElemSet& match, const EdgeColoring& col,
                  int max_edges_, long long cap)
        : g(graph), matching(match), coloring(col), max_edges(max_edges_), state_cap(cap) {
        std::vector<int> colors;
        for (int e = 0; e < g.num_edges(); ++e) colors.push_back(col.color[static_cast<std::size_t>(e)]);
        used_colors = make_set(std::move(colors));
        color_index.assign(static_cast<std::size_t>(col.palette), -1);
        for (std::size_t i = 0; i < used_colors.size(); ++i)
            color_index[static_cast<std::size_t>(used_colors[i])] = static_cast<int>(i);
    }

    static std::uint64_t open_key(std::uint64_t mask, int u, bool tu, int v, bool tv) {
        return (mask << 14) | (static_cast<std::uint64_t>(u) << 8) |
               (static_cast<std::uint64_t>(v) << 2) | (static_cast<std::uint64_t>(tu) << 1) |
               static_cast<std::uint64_t>(tv);
    }
    static std::uint64_t key_mask(std::uint64_t key) { return key >> 14; }
    static int key_u(std::uint64_t key) { return static_cast<int>(key >> 8 & 0x3f); }
    static int key_v(std::uint64_t key) { return static_cast<int>(key >> 2 & 0x3f); }
    static bool key_tu(std::uint64_t key) { return key >> 1 & 1; }
    static bool key_tv(std::uint64_t key) { return key & 1; }

    bool over_cap() const {
        return static_cast<long long>(open_info.size() + closed_info.size()) > state_cap;
    }

    // Builds all reachable states with at most max_edges colors.
    void run() {
        if (used_colors.size() > 48 || g.num_vertices() > 62) {
            aborted = true;
            return;
        }
        open_by_level.assign(static_cast<std::size_t>(max_edges) + 2, {});
        closed_by_level.assign(static_cast<std::size_t>(max_edges) + 2, {});
        closed_info[0] = ClosedInfo{0, -1, true};
        closed_by_level[0].push_back(0);

        // States at the popcount cap have nothing left to do: extending or
        // closing would both exceed max_edges colors.
        for (int level = 0; level < max_edges && !aborted; ++level) {
            for (std::uint64_t mask : closed_by_level[static_cast<std::size_t>(level)]) {
                start_paths(mask, level);
                if (over_cap()) {
                    aborted = true;
                    break;
                }
            }
            if (aborted) break;
            for (std::uint64_t key : open_by_level[static_cast<std::size_t>(level)]) {
                extend_or_close(key, level);
                if (over_cap()) {
                    aborted = true;
                    break;
                }
            }
        }
    }

    void start_paths(std::uint64_t closed_mask, int level) {
        for (int e : matching) {
            int ci = color_index[static_cast<std::size_t>(coloring.color[static_cast<std::size_t>(e)])];
            std::uint64_t bit = std::uint64_t{1} << ci;
            if (closed_mask & bit) continue;
            auto [a, b] = g.edge(e);  // a < b by construction
            std::uint64_t key = open_key(closed_mask | bit, a, true, b, true);
            if (open_info.emplace(key, OpenInfo{closed_mask, e, true}).second)
                open_by_level[static_cast<std::size_t>(level) + 1].push_back(key);
        }
    }

    void extend_or_close(std::uint64_t key, int level) {
        const std::uint64_t mask = key_mask(key);
        const int u = key_u(key);
        const int v = key_v(key);
        const bool tu = key_tu(key);
        const bool tv = key_tv(key);
        for (int e : g.incident_edges(v)) {
            int ci = color_index[static_cast<std::size_t>(coloring.color[static_cast<std::size_t>(e)])];
            std::uint64_t bit = std::uint64_t{1} << ci;
            if (mask & bit) continue;
            bool in_matching = set_contains(matching, e);
            if (in_matching == tv) continue;  // must alternate at v
            auto [a, b] = g.edge(e);
            int w = a == v ? b : a;
            if (w == u) {
                if (in_matching == tu) continue;  // and at u when closing
                std::uint64_t closed_mask = mask | bit;
                if (closed_info.emplace(closed_mask, ClosedInfo{key, e, false}).second)
                    closed_by_level[static_cast<std::size_t>(level) + 1].push_back(closed_mask);
            } else if (level < max_edges) {
                std::uint64_t next = open_key(mask | bit, u, tu, w, in_matching);
                if (open_info.emplace(next, OpenInfo{key, e, false}).second)
                    open_by_level[static_cast<std::size_t>(level) + 1].push_back(next);
            }
        }
    }

    // Rebuilds the edge set behind a closed mask; rejects non-simple walks
    // (every touched vertex must end with degree exactly 2).
    std::optional<ElemSet> reconstruct(std::uint64_t closed_mask) const {
        std::vector<int> edges;
        std::uint64_t mask = closed_mask;
        while (true) {
            auto it = closed_info.find(mask);
            if (it == closed_info.end()) return std::nullopt;
            if (it->second.root) break;
            edges.push_back(it->second.edge);
            std::uint64_t key = it->second.open_key;
            while (true) {
                auto oit = open_info.find(key);
                if (oit == open_info.end()) return std::nullopt;
                edges.push_back(oit->second.edge);
                if (oit->second.from_closed) {
                    mask = oit->second.parent;
                    break;
                }
                key = oit->second.parent;
            }
        }
        ElemSet result = make_set(edges);
        if (result.size() != edges.size()) return std::nullopt;  // repeated edge
        std::vector<int> degree(static_cast<std::size_t>(g.num_vertices()), 0);
        for (int e : result) {
            auto [a, b] = g.edge(e);
            ++degree[static_cast<std::size_t>(a)];
            ++degree[static_cast<std::size_t>(b)];
        }
        for (int deg : degree)
            if (deg != 0 && deg != 2) return std::nullopt;  // overlapping cycles
        return result;
    }
};

}  // namespace

std::optional<ElemSet> alternating_dp(const Graph& g, const ElemSet& matching,
                                      const std::vector<int>& target_colors,
                                      const EdgeColoring& coloring, long long dp_state_cap) {
    for (int c : target_colors)
        if (c < 0 || c >= coloring.palette) throw InputError("target color out of range");
    AlternatingDp dp(g, matching, coloring, static_cast<int>(target_colors.size()), dp_state_cap);
    dp.run();
    if (dp.aborted) return std::nullopt;
    std::uint64_t want = 0;
    for (int c : target_colors) {
        int ci = dp.color_index[static_cast<std::size_t>(c)];
        if (ci < 0) return std::nullopt;  // color appears on no edge
        want |= std::uint64_t{1} << ci;
    }
    if (!dp.closed_info.count(want)) return std::nullopt;
    return dp.reconstruct(want);
}

std::optional<std::vector<ElemSet>> close_diverse_matchings(const Graph& g,
                                                            const ElemSet& matching, int r,
                                                            Weight d, Weight s,
                                                            const DpmBudgets& budgets, Rng& rng,
                                                            DpmStats* stats) {
    if (!g.is_perfect_matching(matching))
        throw ContractError("close_diverse_matchings: not a perfect matching");
    if (r < 1 || d < 0 || s < 0) throw InputError("need r >= 1, d >= 0, s >= 0");

    const int n = g.num_vertices();
    const int s_eff = static_cast<int>(std::min<Weight>(s, n));  // |M ^ M'| <= n always
    const long long palette64 = static_cast<long long>(r) * s;
    const int palette = static_cast<int>(std::min<long long>(palette64, 1 << 20));

    // Degenerate palette: only the empty color set is available, so every
    // output equals the input matching.
    if (palette == 0) {
        if (r >= 2 && d > 0) return std::nullopt;
        return std::vector<ElemSet>(static_cast<std::size_t>(r), matching);
    }

    const long long trials = trial_budget(static_cast<int>(std::min<long long>(palette64, 100)), budgets);
    for (long long trial = 0; trial < trials; ++trial) {
        if (stats) ++stats->close_trials;
        EdgeColoring coloring;
        coloring.palette = palette;
        coloring.color.resize(static_cast<std::size_t>(g.num_edges()));
        for (auto& c : coloring.color) c = rng.below_int(palette);

        AlternatingDp dp(g, matching, coloring, s_eff, budgets.dp_state_cap);
        dp.run();
        if (dp.aborted) continue;

        // Candidate color sets: all reachable closed collections of <= s_eff
        // edges, in deterministic (level, discovery) order.
        std::vector<std::uint64_t> candidates;
        for (const auto& level : dp.closed_by_level)
            for (std::uint64_t mask : level) candidates.push_back(mask);

        // Reconstructions are shared across tuples; a failed reconstruction
        // disqualifies its color set for this trial.
        std::unordered_map<std::uint64_t, std::optional<ElemSet>> cycles;
        auto cycle_edges = [&](std::uint64_t mask) -> const std::optional<ElemSet>& {
            auto it = cycles.find(mask);
            if (it == cycles.end()) it = cycles.emplace(mask, dp.reconstruct(mask)).first;
            return it->second;
        };

        // DFS over r-tuples of candidates (non-decreasing indices), pruned by
        // pairwise color-set distance and total palette use.
        std::vector<int> chosen;
        long long visited = 0;
        std::optional<std::vector<ElemSet>> found;
        auto rec = [&](auto&& self, int from, int colors_used) -> bool {
            if (static_cast<int>(chosen.size()) == r) {
                std::vector<ElemSet> outputs;
                for (int idx : chosen) {
                    const auto& q = cycle_edges(candidates[static_cast<std::size_t>(idx)]);
                    if (!q) return false;
                    outputs.push_back(sym_diff(*q, matching));
                }
                for (const ElemSet& p : outputs)
                    if (!g.is_perfect_matching(p) ||
                        static_cast<Weight>(sym_diff(p, matching).size()) > s)
                        return false;
                for (std::size_t i = 0; i < outputs.size(); ++i)
                    for (std::size_t j = i + 1; j < outputs.size(); ++j)
                        if (static_cast<Weight>(sym_diff(outputs[i], outputs[j]).size()) < d)
                            return false;
                found = std::move(outputs);
                return true;
            }
            for (int i = from; i < static_cast<int>(candidates.size()); ++i) {
                if (++visited > budgets.tuple_cap) return false;
                std::uint64_t mask = candidates[static_cast<std::size_t>(i)];
                int size = std::popcount(mask);
                if (colors_used + size > palette) continue;
                bool compatible = true;
                for (int idx : chosen) {
                    std::uint64_t other = candidates[static_cast<std::size_t>(idx)];
                    if (std::popcount(mask ^ other) < d) {
                        compatible = false;
                        break;
                    }
                }
                if (!compatible) continue;
                chosen.push_back(i);
                int next_from = d > 0 ? i + 1 : i;  // repeats only make sense when d = 0
                if (self(self, next_from, colors_used + size)) return true;
                chosen.pop_back();
            }
            return false;
        };
        rec(rec, 0, 0);
        if (found) return found;
    }
    return std::nullopt;
}

DpmAnswer solve_dpm(const Graph& g, int k, Weight d, const DpmBudgets& budgets,
                    std::uint64_t seed) {
    if (k < 1 || d < 0) throw InputError("need k >= 1 and d >= 0");
    DpmAnswer answer;

    std::optional<ElemSet> first = g.find_perfect_matching();
    if (!first) return answer;  // deterministic no

    if (k == 1 || d == 0) {
        answer.yes = true;
        answer.witness =
            make_witness_cardinality(std::vector<ElemSet>(static_cast<std::size_t>(k), *first));
        return answer;
    }

    const int n = g.num_vertices();
    if (d > n) return answer;  // deterministic no: |M ^ M'| <= n for any two matchings
    for (int rep = 0; rep < budgets.repetitions; ++rep) {
        answer.stats.repetitions_used = rep + 1;
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(rep)));

        // Phase 1: grow far-apart matchings on the shrinking s-schedule
        // s = 2^(k-i-1) * d with i matchings in hand.
        std::vector<ElemSet> far = {*first};
        while (static_cast<int>(far.size()) < k) {
            int have = static_cast<int>(far.size());
            int shift = k - have - 1;
            // s = 2^(k-have-1) * d; no matching can be farther than n/2 edges.
            if (shift >= 30 || d > n || 2 * (d << shift) > n) break;
            std::optional<ElemSet> next =
                far_matching(g, far, static_cast<int>(d << shift), budgets, rng, &answer.stats);
            if (!next) break;
            far.push_back(std::move(*next));
        }

        if (static_cast<int>(far.size()) == k) {
            DiverseWitness witness = make_witness_cardinality(far);
            if (verify_dpm(g, k, d, witness.sets).ok) {
                answer.yes = true;
                answer.witness = std::move(witness);
                return answer;
            }
            continue;
        }

        // Phase 2: for every composition (r_1..r_q) of k over the q clusters,
        // ask for r_i matchings close to M_i; cross-cluster distance is then
        // checked by the verifier.
        // Tolerance for the close phase, s2 = 2^(k-q) * d, clamped at n since
        // |M ^ M'| <= n for any two perfect matchings.
        const int q = static_cast<int>(far.size());
        int shift = k - q;
        Weight s2 = (shift >= 30 || d > n) ? n : std::min<Weight>(d << shift, n);

        std::map<std::pair<int, int>, std::optional<std::vector<ElemSet>>> memo;
        auto cluster = [&](int i, int r) -> const std::optional<std::vector<ElemSet>>& {
            auto key = std::make_pair(i, r);
            auto it = memo.find(key);
            if (it == memo.end())
                it = memo.emplace(key, close_diverse_matchings(g, far[static_cast<std::size_t>(i)], r,
                                                               d, s2, budgets, rng, &answer.stats))
                         .first;
            return it->second;
        };

        std::vector<int> composition(static_cast<std::size_t>(q), 0);
        bool done = false;
        auto enumerate = [&](auto&& self, int idx, int remaining) -> void {
            if (done) return;
            if (idx == q - 1) {
                composition[static_cast<std::size_t>(idx)] = remaining;
                std::vector<ElemSet> assembly;
                for (int i = 0; i < q; ++i) {
                    int ri = composition[static_cast<std::size_t>(i)];
                    if (ri == 0) continue;
                    const auto& part = cluster(i, ri);
                    if (!part) return;
                    assembly.insert(assembly.end(), part->begin(), part->end());
                }
                DiverseWitness witness = make_witness_cardinality(std::move(assembly));
                if (verify_dpm(g, k, d, witness.sets).ok) {
                    answer.yes = true;
                    answer.witness = std::move(witness);
                    done = true;
                }
                return;
            }
            for (int take = 0; take <= remaining && !done; ++take) {
                composition[static_cast<std::size_t>(idx)] = take;
                self(self, idx + 1, remaining - take);
            }
        };
        enumerate(enumerate, 0, k);
        if (done) return answer;
    }

    answer.no_is_probabilistic = true;
    return answer;
}

}  // namespace diversol
