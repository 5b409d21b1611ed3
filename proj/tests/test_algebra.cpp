#include "doctest.h"

#include <cmath>

#include "diversol/algebra.hpp"
#include "test_util.hpp"

using namespace diversol;

TEST_CASE("reduction polynomials are irreducible for every supported degree") {
    for (int m = 1; m <= 32; ++m) CHECK(Gf2m::is_irreducible(m, Gf2m::reduction_low_bits(m)));
    // A reducible polynomial is rejected: x^4 + x^2 + 1 = (x^2+x+1)^2.
    CHECK(!Gf2m::is_irreducible(4, 0b101));
}

TEST_CASE("characteristic two and inverses") {
    Rng rng(51);
    for (int m : {2, 3, 8, 13}) {
        Gf2m field(m);
        for (int trial = 0; trial < 200; ++trial) {
            auto a = field.random_element(rng);
            CHECK(field.add(a, a) == 0);
            if (a != 0) CHECK(field.mul(a, field.inv(a)) == 1);
        }
    }
    CHECK_THROWS_AS(Gf2m(4).inv(0), InputError);
}

TEST_CASE("GF(4) multiplication follows the reduction polynomial") {
    // x * x = x + 1 modulo x^2 + x + 1.
    Gf2m field(2);
    CHECK(field.mul(0b10, 0b10) == 0b11);
}

TEST_CASE("field axioms hold on exhaustive small tables and random triples") {
    for (int m : {2, 3}) {
        Gf2m field(m);
        const std::uint64_t q = field.size();
        for (std::uint64_t a = 0; a < q; ++a)
            for (std::uint64_t b = 0; b < q; ++b) {
                CHECK(field.mul(a, b) == field.mul(b, a));
                for (std::uint64_t c = 0; c < q; ++c) {
                    CHECK(field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c)));
                    CHECK(field.mul(a, field.add(b, c)) ==
                          field.add(field.mul(a, b), field.mul(a, c)));
                }
            }
    }
    Gf2m field(16);
    Rng rng(52);
    for (int trial = 0; trial < 500; ++trial) {
        auto a = field.random_element(rng), b = field.random_element(rng),
             c = field.random_element(rng);
        CHECK(field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c)));
        CHECK(field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c)));
    }
}

TEST_CASE("determinant basics") {
    Gf2m field(8);
    FieldMatrix identity(3);
    for (int i = 0; i < 3; ++i) identity.set(i, i, 1);
    CHECK(determinant(field, identity) == 1);

    FieldMatrix zero_row(3);
    zero_row.set(0, 0, 5);
    zero_row.set(0, 1, 7);
    zero_row.set(2, 2, 9);
    CHECK(determinant(field, zero_row) == 0);

    // 2x2: ad + bc in characteristic two.
    Rng rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        FieldMatrix m(2);
        auto a = field.random_element(rng), b = field.random_element(rng);
        auto c = field.random_element(rng), d = field.random_element(rng);
        m.set(0, 0, a);
        m.set(0, 1, b);
        m.set(1, 0, c);
        m.set(1, 1, d);
        CHECK(determinant(field, m) == field.add(field.mul(a, d), field.mul(b, c)));
    }
}

TEST_CASE("determinant agrees with the symbolic oracle at random points") {
    Rng rng(54);
    Gf2m field(16);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(4));  // up to 5
        const int vars = 4;
        std::vector<std::vector<SparsePolynomial>> symbolic(
            static_cast<std::size_t>(n), std::vector<SparsePolynomial>(static_cast<std::size_t>(n)));
        std::vector<Gf2m::Elem> point(vars);
        for (auto& x : point) x = field.random_element(rng);
        FieldMatrix numeric(n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                // Entry: random monomial or zero.
                if (rng.below(4) == 0) continue;
                Monomial mono;
                for (int v = 0; v < vars; ++v)
                    if (rng.below(2)) mono[v] += 1;
                symbolic[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].add_monomial(mono);
                numeric.set(r, c,
                            symbolic[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]
                                .evaluate(field, point));
            }
        CHECK(symbolic_det(symbolic).evaluate(field, point) ==
              determinant(field, numeric));
    }
}

TEST_CASE("sieve with empty target is the plain evaluation") {
    Gf2m field(8);
    PointEvaluator eval = [&](const std::vector<Gf2m::Elem>& p) {
        return field.add(field.mul(p[0], p[1]), p[1]);  // x0*x1 + x1
    };
    std::vector<Gf2m::Elem> point = {3, 5};
    CHECK(sieve_evaluate(field, eval, {}, point) == eval(point));
}

TEST_CASE("sieve keeps exactly the monomials divisible by the target product") {
    Gf2m field(8);
    // P = x0*x1 + x1; target {x0}: Q = x0*x1.
    PointEvaluator eval = [&](const std::vector<Gf2m::Elem>& p) {
        return field.add(field.mul(p[0], p[1]), p[1]);
    };
    Rng rng(55);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Gf2m::Elem> point = {field.random_element(rng), field.random_element(rng)};
        CHECK(sieve_evaluate(field, eval, {0}, point) == field.mul(point[0], point[1]));
    }
}

TEST_CASE("sieve matches the symbolic sieve on random polynomials") {
    Rng rng(56);
    Gf2m field(16);
    for (int trial = 0; trial < 120; ++trial) {
        const int vars = 5;
        SparsePolynomial p;
        const int terms = 1 + static_cast<int>(rng.below(6));
        for (int t = 0; t < terms; ++t) {
            Monomial mono;
            for (int v = 0; v < vars; ++v) {
                int e = static_cast<int>(rng.below(3));
                if (e) mono[v] = e;
            }
            p.add_monomial(mono);
        }
        std::vector<int> targets;
        for (int v = 0; v < vars; ++v)
            if (rng.below(3) == 0) targets.push_back(v);

        SparsePolynomial q = p.sieve(targets);
        // Symbolic check: q is exactly the divisible part of p.
        for (const Monomial& mono : p.monomials()) {
            bool divisible = true;
            for (int v : targets)
                if (!mono.count(v)) divisible = false;
            bool kept = std::binary_search(q.monomials().begin(), q.monomials().end(), mono);
            CHECK(kept == divisible);
        }
        for (const Monomial& mono : q.monomials())
            CHECK(std::binary_search(p.monomials().begin(), p.monomials().end(), mono));

        // Numeric check at a random point.
        std::vector<Gf2m::Elem> point(vars);
        for (auto& x : point) x = field.random_element(rng);
        PointEvaluator eval = [&](const std::vector<Gf2m::Elem>& pt) {
            return p.evaluate(field, pt);
        };
        CHECK(sieve_evaluate(field, eval, targets, point) == q.evaluate(field, point));
    }
}

TEST_CASE("sieve refuses oversized targets") {
    Gf2m field(8);
    PointEvaluator eval = [](const std::vector<Gf2m::Elem>&) { return Gf2m::Elem{0}; };
    std::vector<int> targets(30);
    for (int i = 0; i < 30; ++i) targets[static_cast<std::size_t>(i)] = i;
    CHECK_THROWS_AS(sieve_evaluate(field, eval, targets, std::vector<Gf2m::Elem>(30, 1), 1 << 10),
                    BudgetError);
}

TEST_CASE("observed zero rate of random evaluations respects Schwartz-Zippel") {
    // det of the 2x2 Tutte-style matrix [[0, x], [x, 0]] is x^2: degree 2.
    Gf2m field(8);  // 256 elements
    Rng rng(57);
    const int trials = 20000;
    int zeroes = 0;
    for (int trial = 0; trial < trials; ++trial) {
        FieldMatrix m(2);
        auto x = field.random_element(rng);
        m.set(0, 1, x);
        m.set(1, 0, x);
        if (determinant(field, m) == 0) ++zeroes;
    }
    const double rate = static_cast<double>(zeroes) / trials;
    const double bound = 2.0 / 256.0;
    const double sigma = std::sqrt(bound * (1 - bound) / trials);
    CHECK(rate <= bound + 3 * sigma);
}
