#include "diversol/algebra.hpp"

#include <algorithm>

#include "diversol/errors.hpp"

namespace diversol {

Gf2m::Elem determinant(const Gf2m& field, FieldMatrix m) {
    const int n = m.size();
    Gf2m::Elem det = field.one();
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (m.at(row, col) != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return field.zero();
        if (pivot != col)
            for (int c = col; c < n; ++c) {
                Gf2m::Elem tmp = m.at(col, c);
                m.set(col, c, m.at(pivot, c));
                m.set(pivot, c, tmp);
            }
        Gf2m::Elem head = m.at(col, col);
        det = field.mul(det, head);
        Gf2m::Elem head_inv = field.inv(head);
        for (int row = col + 1; row < n; ++row) {
            Gf2m::Elem factor = field.mul(m.at(row, col), head_inv);
            if (factor == 0) continue;
            for (int c = col; c < n; ++c)
                m.set(row, c, field.add(m.at(row, c), field.mul(factor, m.at(col, c))));
        }
    }
    return det;
}

Gf2m::Elem sieve_evaluate(const Gf2m& field, const PointEvaluator& eval,
                          const std::vector<int>& target_vars, std::vector<Gf2m::Elem> point,
                          std::uint64_t max_calls) {
    const std::size_t t = target_vars.size();
    if (t >= 63 || (std::uint64_t{1} << t) > max_calls)
        throw BudgetError("monomial sieve over " + std::to_string(t) +
                          " targets exceeds the evaluation budget");
    std::vector<Gf2m::Elem> saved;
    saved.reserve(t);
    for (int v : target_vars) {
        if (v < 0 || v >= static_cast<int>(point.size()))
            throw InputError("sieve target variable out of range");
        saved.push_back(point[static_cast<std::size_t>(v)]);
    }
    Gf2m::Elem acc = field.zero();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
        for (std::size_t i = 0; i < t; ++i)
            point[static_cast<std::size_t>(target_vars[i])] = (mask >> i & 1) ? 0 : saved[i];
        acc = field.add(acc, eval(point));
    }
    for (std::size_t i = 0; i < t; ++i) point[static_cast<std::size_t>(target_vars[i])] = saved[i];
    return acc;
}

SparsePolynomial SparsePolynomial::constant_one() {
    SparsePolynomial p;
    p.monomials_.push_back({});
    return p;
}

SparsePolynomial SparsePolynomial::variable(int var) {
    SparsePolynomial p;
    p.monomials_.push_back({{var, 1}});
    return p;
}

void SparsePolynomial::add_monomial(const Monomial& m) {
    auto it = std::lower_bound(monomials_.begin(), monomials_.end(), m);
    if (it != monomials_.end() && *it == m)
        monomials_.erase(it);
    else
        monomials_.insert(it, m);
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& other) const {
    SparsePolynomial out = *this;
    for (const Monomial& m : other.monomials_) out.add_monomial(m);
    return out;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& other) const {
    SparsePolynomial out;
    for (const Monomial& a : monomials_)
        for (const Monomial& b : other.monomials_) {
            Monomial prod = a;
            for (auto [var, exp] : b) prod[var] += exp;
            out.add_monomial(prod);
        }
    return out;
}

SparsePolynomial SparsePolynomial::with_vars_zeroed(const std::vector<int>& vars) const {
    SparsePolynomial out;
    for (const Monomial& m : monomials_) {
        bool killed = false;
        for (int v : vars)
            if (m.count(v)) {
                killed = true;
                break;
            }
        if (!killed) out.add_monomial(m);
    }
    return out;
}

SparsePolynomial SparsePolynomial::sieve(const std::vector<int>& target_vars) const {
    // Symbolic counterpart of sieve_evaluate: sum of all zeroing patterns.
    SparsePolynomial acc;
    const std::size_t t = target_vars.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
        std::vector<int> zeroed;
        for (std::size_t i = 0; i < t; ++i)
            if (mask >> i & 1) zeroed.push_back(target_vars[i]);
        acc = acc + with_vars_zeroed(zeroed);
    }
    return acc;
}

Gf2m::Elem SparsePolynomial::evaluate(const Gf2m& field,
                                      const std::vector<Gf2m::Elem>& point) const {
    Gf2m::Elem acc = field.zero();
    for (const Monomial& m : monomials_) {
        Gf2m::Elem term = field.one();
        for (auto [var, exp] : m) {
            if (var < 0 || var >= static_cast<int>(point.size()))
                throw InputError("evaluation point misses a variable");
            term = field.mul(term, field.pow(point[static_cast<std::size_t>(var)],
                                             static_cast<std::uint64_t>(exp)));
        }
        acc = field.add(acc, term);
    }
    return acc;
}

SparsePolynomial symbolic_det(const std::vector<std::vector<SparsePolynomial>>& entries) {
    const int n = static_cast<int>(entries.size());
    if (n > 6) throw BudgetError("symbolic determinant limited to 6x6");
    for (const auto& row : entries)
        if (static_cast<int>(row.size()) != n) throw InputError("matrix must be square");

    SparsePolynomial acc;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    // det = perm in characteristic two, so signs are irrelevant.
    do {
        SparsePolynomial term = SparsePolynomial::constant_one();
        bool zero = false;
        for (int i = 0; i < n && !zero; ++i) {
            const SparsePolynomial& entry =
                entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            if (entry.is_zero())
                zero = true;
            else
                term = term * entry;
        }
        if (!zero) acc = acc + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

}  // namespace diversol
