#ifndef DIVERSOL_ALGEBRA_HPP
#define DIVERSOL_ALGEBRA_HPP

#include <functional>
#include <map>
#include <vector>

#include "diversol/gf2m.hpp"

namespace diversol {

// Square matrix of GF(2^m) elements; the field travels separately.
class FieldMatrix {
public:
    explicit FieldMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}

    int size() const { return n_; }
    Gf2m::Elem at(int r, int c) const { return data_[static_cast<std::size_t>(r) * n_ + c]; }
    void set(int r, int c, Gf2m::Elem v) { data_[static_cast<std::size_t>(r) * n_ + c] = v; }

private:
    int n_;
    std::vector<Gf2m::Elem> data_;
};

// Exact determinant by Gaussian elimination with pivot search. In
// characteristic two row swaps do not change the determinant.
Gf2m::Elem determinant(const Gf2m& field, FieldMatrix m);

// Inclusion-exclusion monomial sieve: given an evaluator for P and target
// variable indices T, returns Q(point) where Q = sum over I subset of T of P
// with the variables of I zeroed. Q keeps exactly the monomials of P that are
// divisible by the product of the T variables. Costs 2^|T| evaluator calls.
using PointEvaluator = std::function<Gf2m::Elem(const std::vector<Gf2m::Elem>&)>;

Gf2m::Elem sieve_evaluate(const Gf2m& field, const PointEvaluator& eval,
                          const std::vector<int>& target_vars, std::vector<Gf2m::Elem> point,
                          std::uint64_t max_calls = std::uint64_t{1} << 22);

// Tiny symbolic multivariate polynomials over GF(2), used as a test oracle.
// A monomial maps variable index -> exponent (> 0); coefficient is 1.
using Monomial = std::map<int, int>;

class SparsePolynomial {
public:
    SparsePolynomial() = default;

    static SparsePolynomial zero() { return {}; }
    static SparsePolynomial constant_one();
    static SparsePolynomial variable(int var);

    bool is_zero() const { return monomials_.empty(); }
    const std::vector<Monomial>& monomials() const { return monomials_; }

    void add_monomial(const Monomial& m);  // char-2: adding twice cancels

    SparsePolynomial operator+(const SparsePolynomial& other) const;
    SparsePolynomial operator*(const SparsePolynomial& other) const;

    SparsePolynomial with_vars_zeroed(const std::vector<int>& vars) const;

    // Symbolic sieve: keeps exactly the monomials divisible by prod of targets.
    SparsePolynomial sieve(const std::vector<int>& target_vars) const;

    Gf2m::Elem evaluate(const Gf2m& field, const std::vector<Gf2m::Elem>& point) const;

    bool operator==(const SparsePolynomial& other) const = default;

private:
    std::vector<Monomial> monomials_;  // sorted, no duplicates, no zero coeffs
};

// Exact symbolic determinant of a small matrix of polynomials, via the
// permutation expansion (in characteristic two the determinant equals the
// permanent). n <= 6.
SparsePolynomial symbolic_det(const std::vector<std::vector<SparsePolynomial>>& entries);

}  // namespace diversol

#endif
