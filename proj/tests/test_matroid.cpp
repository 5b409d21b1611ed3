#include "doctest.h"

#include "diversol/matroid.hpp"
#include "test_util.hpp"

using namespace diversol;
using testutil::all_subsets;
using testutil::matroids_agree;
using testutil::random_matrix;

namespace {

// Triangle graph: edges e0={0,1}, e1={1,2}, e2={0,2}.
MatroidPtr triangle() { return make_graphic(3, {{0, 1}, {1, 2}, {0, 2}}); }

// Deliberately broken oracle: {0,1} and {2} independent but {0}, {1} not.
class BrokenOracle final : public Matroid {
public:
    BrokenOracle() : Matroid({0, 1, 2}) {}

protected:
    bool indep_impl(const ElemSet& a) const override {
        return a.empty() || a == ElemSet{0, 1} || a == ElemSet{2};
    }
};

}  // namespace

TEST_CASE("rank on uniform and graphic matroids") {
    auto u53 = make_uniform(5, 3);
    CHECK(u53->rank({0, 1, 2, 3}) == 3);
    CHECK(u53->rank({}) == 0);

    // Brute force over the triangle: largest acyclic subset of all 3 edges.
    auto k3 = triangle();
    int best = 0;
    for (const ElemSet& s : all_subsets(k3->ground()))
        if (k3->is_independent(s)) best = std::max<int>(best, static_cast<int>(s.size()));
    CHECK(best == 2);
    CHECK(k3->rank({0, 1, 2}) == 2);
}

TEST_CASE("corank matches the formula and the dual") {
    auto u53 = make_uniform(5, 3);
    CHECK(u53->corank(u53->ground()) == 2);
    CHECK(u53->corank({}) == 0);

    auto k3 = triangle();
    CHECK(k3->corank({0}) == 1);  // 1 - 2 + 2

    // corank(A) equals the rank of A in the dual, exhaustively.
    Rng rng(11);
    for (int family = 0; family < 6; ++family) {
        MatroidPtr m = testutil::random_matroid(rng, 6, family);
        DualView dual(m);
        for (const ElemSet& s : all_subsets(m->ground())) CHECK(m->corank(s) == dual.rank(s));
    }
}

TEST_CASE("closure basics") {
    auto u53 = make_uniform(5, 3);
    CHECK(u53->closure({0, 1}) == ElemSet{0, 1});
    CHECK(u53->closure({0, 1, 2}) == u53->ground());
    CHECK(triangle()->closure({0, 1}) == ElemSet{0, 1, 2});
}

TEST_CASE("rank is monotone and bounded by additions") {
    Rng rng(12);
    for (int family = 0; family < 6; ++family) {
        MatroidPtr m = testutil::random_matroid(rng, 6, family);
        for (const ElemSet& b : all_subsets(m->ground()))
            for (const ElemSet& a : all_subsets(b)) {
                int ra = m->rank(a), rb = m->rank(b);
                CHECK(ra <= rb);
                CHECK(rb <= ra + static_cast<int>(b.size() - a.size()));
            }
    }
}

TEST_CASE("duals of uniform matroids and double duals") {
    auto u53 = make_uniform(5, 3);
    CHECK(matroids_agree(DualView(u53), *make_uniform(5, 2)));

    Rng rng(13);
    for (int family = 0; family < 6; ++family) {
        MatroidPtr m = testutil::random_matroid(rng, 5, family);
        CHECK(matroids_agree(DualView(std::make_shared<DualView>(m)), *m));
    }
}

TEST_CASE("deletion and contraction of uniform matroids") {
    auto u53 = make_uniform(5, 3);
    MatroidPtr contracted = make_contracted(u53, {0});
    MatroidPtr deleted = make_deleted(u53, {0});
    CHECK(contracted->ground() == ElemSet{1, 2, 3, 4});
    for (const ElemSet& s : all_subsets(contracted->ground())) {
        CHECK(contracted->is_independent(s) == (s.size() <= 2));
        CHECK(deleted->is_independent(s) == (s.size() <= 3));
    }
}

TEST_CASE("contraction rank formula holds exhaustively") {
    Rng rng(14);
    for (int family = 0; family < 6; ++family) {
        MatroidPtr m = testutil::random_matroid(rng, 6, family);
        for (const ElemSet& x : all_subsets(m->ground())) {
            MatroidPtr minor = make_contracted(m, x);
            int rx = m->rank(x);
            for (const ElemSet& y : all_subsets(minor->ground()))
                CHECK(minor->rank(y) == m->rank(set_union(x, y)) - rx);
        }
    }
}

TEST_CASE("deleting in the dual is contracting in the primal") {
    Rng rng(15);
    for (int family = 0; family < 6; ++family) {
        MatroidPtr m = testutil::random_matroid(rng, 5, family);
        for (const ElemSet& x : all_subsets(m->ground())) {
            MatroidPtr lhs = make_deleted(make_dual(m), x);
            MatroidPtr rhs = make_dual(make_contracted(m, x));
            CHECK(matroids_agree(*lhs, *rhs));
        }
    }
}

TEST_CASE("stacked minors flatten onto the base") {
    auto u = make_uniform(8, 4);
    MatroidPtr once = make_minor(u, {0}, {1});
    MatroidPtr twice = make_minor(once, {2}, {3});
    auto* view = dynamic_cast<const MinorView*>(twice.get());
    REQUIRE(view != nullptr);
    CHECK(view->base().get() == u.get());
    CHECK(matroids_agree(*twice, MinorView(u, {0, 2}, {1, 3})));
}

TEST_CASE("overlapping delete and contract sets are rejected") {
    auto u = make_uniform(4, 2);
    CHECK_THROWS_AS(MinorView(u, {1}, {1, 2}), InputError);
}

TEST_CASE("extend_to_basis honours the constraints") {
    auto u53 = make_uniform(5, 3);
    ElemSet b = u53->extend_to_basis({0}, {1});
    CHECK(set_contains(b, 0));
    CHECK(!set_contains(b, 1));
    CHECK(u53->is_basis(b));

    CHECK(u53->is_basis(u53->extend_to_basis({}, {})));

    CHECK(triangle()->extend_to_basis({0}, {1}) == ElemSet{0, 2});

    Rng rng(16);
    for (int family = 0; family < 9; ++family) {
        MatroidPtr m = testutil::random_matroid(rng, 6, family);
        DualView dual(m);
        for (const ElemSet& x : all_subsets(m->ground())) {
            if (!m->is_independent(x)) continue;
            ElemSet rest = set_diff(m->ground(), x);
            ElemSet y = dual.max_independent_subset(rest);
            ElemSet basis = m->extend_to_basis(x, y);
            CHECK(m->is_basis(basis));
            CHECK(is_subset(x, basis));
            CHECK(set_intersect(basis, y).empty());
        }
    }

    CHECK_THROWS_AS(u53->extend_to_basis({0, 1, 2, 3}, {}), ContractError);
}

TEST_CASE("axiom checker passes on real matroids") {
    for (MatroidPtr m : {make_uniform(4, 2), triangle(),
                         make_linear(ModMatrix({{1, 0, 1, 1}, {0, 1, 1, 2}}, 3))}) {
        CHECK(check_axioms(*m, AxiomMode::Independence).ok);
        CHECK(check_axioms(*m, AxiomMode::Basis).ok);
        CHECK(check_axioms(*m, AxiomMode::Closure).ok);
    }
}

TEST_CASE("axiom checker reports violations of downward closure") {
    BrokenOracle broken;
    AxiomReport report = check_axioms(broken, AxiomMode::Independence);
    CHECK(!report.ok);
    bool found_i2 = false;
    for (const std::string& v : report.violations)
        if (v.find("(I2)") != std::string::npos) found_i2 = true;
    CHECK(found_i2);
}

TEST_CASE("axiom checker refuses oversized ground sets") {
    CHECK_THROWS_AS(check_axioms(*make_uniform(13, 3), AxiomMode::Independence), BudgetError);
}

TEST_CASE("linear matroid dual representation matches the dual view") {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        ModMatrix m = random_matrix(rng, 3, 6, 5);
        auto linear = make_linear(m);
        auto dual_rep = make_linear(m.dual_representation());
        CHECK(matroids_agree(DualView(linear), *dual_rep));
    }
}

TEST_CASE("element ids outside the ground set are input errors") {
    auto u = make_uniform(3, 2);
    CHECK_THROWS_AS(u->is_independent({5}), InputError);
    MatroidPtr minor = make_deleted(u, {1});
    CHECK_THROWS_AS(minor->is_independent({1}), InputError);
}
