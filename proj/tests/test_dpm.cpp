#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "diversol/dpm.hpp"
#include "diversol/oracles.hpp"
#include "test_util.hpp"

using namespace diversol;

namespace {

Graph k4() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
Graph c4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }
Graph c6() { return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}); }
Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }

// Tutte matrix of a graph as symbolic polynomials; labels optional.
std::vector<std::vector<SparsePolynomial>> symbolic_tutte(
    const Graph& g, const std::vector<std::vector<int>>& labels) {
    const int n = g.num_vertices();
    std::vector<std::vector<SparsePolynomial>> entries(
        static_cast<std::size_t>(n), std::vector<SparsePolynomial>(static_cast<std::size_t>(n)));
    for (int e = 0; e < g.num_edges(); ++e) {
        Monomial mono;
        mono[e] = 1;
        for (int y : labels[static_cast<std::size_t>(e)]) mono[g.num_edges() + y] += 1;
        auto [u, v] = g.edge(e);
        entries[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)].add_monomial(mono);
        entries[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)].add_monomial(mono);
    }
    return entries;
}

}  // namespace

TEST_CASE("perfect matching enumeration on the small fixtures") {
    std::vector<ElemSet> k4_pms = enumerate_perfect_matchings(k4());
    CHECK(k4_pms.size() == 3);
    for (std::size_t i = 0; i < k4_pms.size(); ++i)
        for (std::size_t j = i + 1; j < k4_pms.size(); ++j)
            CHECK(sym_diff(k4_pms[i], k4_pms[j]).size() == 4);

    CHECK(enumerate_perfect_matchings(path3()).empty());
    CHECK(enumerate_perfect_matchings(Graph(2, {{0, 1}})).size() == 1);
    // Star K_{1,3} has no perfect matching.
    CHECK(enumerate_perfect_matchings(Graph(4, {{0, 1}, {0, 2}, {0, 3}})).empty());
    Rng rng(1);
    CHECK_THROWS_AS(enumerate_perfect_matchings(testutil::random_graph(rng, 16, 30)), BudgetError);
}

TEST_CASE("symmetric difference of perfect matchings is twice the one-sided difference") {
    std::vector<ElemSet> pms = enumerate_perfect_matchings(k4());
    for (const ElemSet& a : pms)
        for (const ElemSet& b : pms)
            CHECK(sym_diff(a, b).size() == 2 * set_diff(a, b).size());
}

TEST_CASE("symmetric-difference cardinality obeys the triangle inequality") {
    for (const Graph& g : {k4(), c6()}) {
        std::vector<ElemSet> pms = enumerate_perfect_matchings(g);
        for (const ElemSet& a : pms)
            for (const ElemSet& b : pms)
                for (const ElemSet& c : pms)
                    CHECK(sym_diff(a, b).size() + sym_diff(b, c).size() >= sym_diff(a, c).size());
    }
}

TEST_CASE("tutte determinant detects perfect matchings") {
    CHECK(has_perfect_matching_tutte(k4(), 7));
    CHECK(!has_perfect_matching_tutte(path3(), 7));
    CHECK(!has_perfect_matching_tutte(Graph(4, {{0, 1}, {0, 2}, {0, 3}}), 7));
}

TEST_CASE("monomials of the labeled Tutte determinant are the perfect matchings") {
    // All connected graphs on 4 vertices, with a fixed label pattern.
    std::vector<std::pair<int, int>> all_edges;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) all_edges.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (1u << all_edges.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < all_edges.size(); ++i)
            if (mask >> i & 1) edges.push_back(all_edges[i]);
        Graph g(4, edges);
        std::vector<std::vector<int>> labels(static_cast<std::size_t>(g.num_edges()));
        for (int e = 0; e < g.num_edges(); ++e)
            if (e % 2 == 0) labels[static_cast<std::size_t>(e)] = {e % 3};

        SparsePolynomial det = symbolic_det(symbolic_tutte(g, labels));
        std::vector<ElemSet> pms = enumerate_perfect_matchings(g);

        CHECK(det.monomials().size() == pms.size());
        for (const ElemSet& pm : pms) {
            Monomial expected;
            for (int e : pm) {
                expected[e] = 2;
                for (int y : labels[static_cast<std::size_t>(e)]) expected[g.num_edges() + y] += 2;
            }
            CHECK(std::binary_search(det.monomials().begin(), det.monomials().end(), expected));
        }
    }
}

TEST_CASE("far matching with s = 0 finds some perfect matching") {
    Rng rng(61);
    DpmBudgets budgets;
    std::vector<ElemSet> pms = enumerate_perfect_matchings(k4());
    auto found = far_matching(k4(), {pms[0]}, 0, budgets, rng);
    REQUIRE(found.has_value());
    CHECK(k4().is_perfect_matching(*found));
}

TEST_CASE("far matching on the cycle returns the opposite matching") {
    Rng rng(62);
    DpmBudgets budgets;
    Graph g = c4();
    ElemSet m1 = {0, 2};  // edges {0,1} and {2,3}
    auto found = far_matching(g, {m1}, 2, budgets, rng);
    REQUIRE(found.has_value());
    CHECK(*found == ElemSet{1, 3});
}

TEST_CASE("far matching on K4 avoids the given matching") {
    Rng rng(63);
    DpmBudgets budgets;
    std::vector<ElemSet> pms = enumerate_perfect_matchings(k4());
    auto found = far_matching(k4(), {pms[0]}, 2, budgets, rng);
    REQUIRE(found.has_value());
    CHECK(set_intersect(*found, pms[0]).empty());
}

TEST_CASE("far matching success rate is at least the color-coding bound") {
    // Per-trial success must clear (2/3)*e^{-rs} - 3 sigma on the two
    // fixtures where the target matching exists.
    struct Fixture {
        Graph g;
        ElemSet m1;
        int s;
    };
    std::vector<Fixture> fixtures = {{c4(), {0, 2}, 2},
                                     {k4(), enumerate_perfect_matchings(k4())[0], 2}};
    Rng rng(64);
    for (const Fixture& f : fixtures) {
        const int trials = 10000;
        int successes = 0;
        DpmBudgets budgets;
        budgets.trial_cap = 1;
        for (int t = 0; t < trials; ++t)
            if (far_matching(f.g, {f.m1}, f.s, budgets, rng).has_value()) ++successes;
        const double rate = static_cast<double>(successes) / trials;
        const double bound = (2.0 / 3.0) * std::exp(-1.0 * f.s);
        const double sigma = std::sqrt(bound * (1 - bound) / trials);
        CHECK(rate >= bound - 3 * sigma);
    }
}

TEST_CASE("alternating DP base case and the four-cycle") {
    Graph g = c4();
    ElemSet m = {0, 2};
    EdgeColoring coloring{{0, 1, 2, 3}, 4};

    CHECK(alternating_dp(g, m, {}, coloring) == ElemSet{});

    auto cycle = alternating_dp(g, m, {0, 1, 2, 3}, coloring);
    REQUIRE(cycle.has_value());
    CHECK(*cycle == ElemSet{0, 1, 2, 3});

    for (int c = 0; c < 4; ++c) CHECK(!alternating_dp(g, m, {c}, coloring).has_value());
}

TEST_CASE("alternating DP rejects non-alternating color sets") {
    // Path colors exist but no alternating cycle uses exactly two colors of C4.
    Graph g = c4();
    ElemSet m = {0, 2};
    EdgeColoring coloring{{0, 1, 2, 3}, 4};
    CHECK(!alternating_dp(g, m, {0, 1}, coloring).has_value());
}

TEST_CASE("close diverse matchings reproduces the C4 and K4 answers") {
    Rng rng(65);
    DpmBudgets budgets;

    Graph cycle = c4();
    ElemSet m = {0, 2};
    auto pair = close_diverse_matchings(cycle, m, 2, 2, 4, budgets, rng);
    REQUIRE(pair.has_value());
    CHECK(sym_diff((*pair)[0], (*pair)[1]).size() >= 2);

    auto trivial = close_diverse_matchings(cycle, m, 1, 0, 0, budgets, rng);
    REQUIRE(trivial.has_value());
    CHECK((*trivial)[0] == m);

    Graph complete = k4();
    std::vector<ElemSet> pms = enumerate_perfect_matchings(complete);
    auto two = close_diverse_matchings(complete, pms[0], 2, 4, 4, budgets, rng);
    REQUIRE(two.has_value());
    CHECK(sym_diff((*two)[0], (*two)[1]).size() == 4);
}

TEST_CASE("solver on the fixture instances") {
    DpmBudgets budgets;
    DpmAnswer yes = solve_dpm(k4(), 3, 4, budgets, 7);
    CHECK(yes.yes);
    REQUIRE(yes.witness.has_value());
    CHECK(yes.witness->min_pairwise >= 4);
    CHECK(verify_dpm(k4(), 3, 4, yes.witness->sets).ok);

    DpmAnswer no = solve_dpm(k4(), 4, 1, budgets, 7);
    CHECK(!no.yes);
    CHECK(no.no_is_probabilistic);

    DpmAnswer tiny = solve_dpm(Graph(2, {{0, 1}}), 2, 1, budgets, 7);
    CHECK(!tiny.yes);

    DpmAnswer single = solve_dpm(k4(), 1, 100, budgets, 7);
    CHECK(single.yes);

    DpmAnswer no_pm = solve_dpm(path3(), 1, 0, budgets, 7);
    CHECK(!no_pm.yes);
    CHECK(!no_pm.no_is_probabilistic);  // deterministic: no perfect matching at all
}

TEST_CASE("solver answers match the enumeration oracle on random graphs") {
    Rng rng(66);
    DpmBudgets budgets;
    int yes_seen = 0, no_seen = 0;
    for (int trial = 0; trial < 25; ++trial) {
        int n = 4 + 2 * static_cast<int>(rng.below(3));  // 4, 6, 8
        Graph g = testutil::random_graph(rng, n, n + static_cast<int>(rng.below(4)));
        int k = 2 + static_cast<int>(rng.below(2));
        Weight d = 1 + static_cast<Weight>(rng.below(4));
        auto oracle = brute_force_dpm(g, k, d);
        DpmAnswer answer = solve_dpm(g, k, d, budgets, 1000 + static_cast<std::uint64_t>(trial));
        if (oracle.has_value()) {
            ++yes_seen;
            CHECK(answer.yes);  // defaults give >= 99% completeness on this scale
        } else {
            ++no_seen;
            CHECK(!answer.yes);  // soundness: yes would carry a verified witness
        }
        if (answer.yes) CHECK(verify_dpm(g, k, d, answer.witness->sets).ok);
    }
    CHECK(yes_seen > 0);
    CHECK(no_seen > 0);
}

TEST_CASE("over-large d is a deterministic no") {
    DpmBudgets budgets;
    DpmAnswer answer = solve_dpm(k4(), 2, 100, budgets, 3);
    CHECK(!answer.yes);
    CHECK(!answer.no_is_probabilistic);
}

TEST_CASE("alternating DP aborts under a tiny state cap") {
    Graph g = c4();
    ElemSet m = {0, 2};
    EdgeColoring coloring{{0, 1, 2, 3}, 4};
    CHECK(!alternating_dp(g, m, {0, 1, 2, 3}, coloring, 1).has_value());
}

TEST_CASE("far matching handles two reference matchings at once") {
    Rng rng(67);
    DpmBudgets budgets;
    std::vector<ElemSet> pms = enumerate_perfect_matchings(k4());
    auto third = far_matching(k4(), {pms[0], pms[1]}, 2, budgets, rng);
    REQUIRE(third.has_value());
    CHECK(*third == pms[2]);
}

TEST_CASE("identical seeds give identical witnesses") {
    DpmBudgets budgets;
    DpmAnswer a = solve_dpm(c6(), 2, 6, budgets, 42);
    DpmAnswer b = solve_dpm(c6(), 2, 6, budgets, 42);
    REQUIRE(a.yes);
    REQUIRE(b.yes);
    CHECK(a.witness->sets == b.witness->sets);
    CHECK(a.stats.far_trials == b.stats.far_trials);
    CHECK(a.stats.close_trials == b.stats.close_trials);
}
