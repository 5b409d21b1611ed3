#include "diversol/linalg_mod_p.hpp"

#include <cassert>

#include "diversol/errors.hpp"

namespace diversol {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

ModMatrix::ModMatrix(int rows, int cols, std::int64_t p)
    : rows_(rows), cols_(cols), p_(p), data_(static_cast<std::size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw InputError("matrix dimensions must be nonnegative");
    if (!is_prime(p)) throw InputError("matrix modulus must be prime");
}

ModMatrix::ModMatrix(std::vector<std::vector<std::int64_t>> entries, std::int64_t p)
    : ModMatrix(static_cast<int>(entries.size()),
                entries.empty() ? 0 : static_cast<int>(entries[0].size()), p) {
    for (int r = 0; r < rows_; ++r) {
        if (static_cast<int>(entries[r].size()) != cols_)
            throw InputError("ragged matrix rows");
        for (int c = 0; c < cols_; ++c) set(r, c, entries[r][c]);
    }
}

void ModMatrix::set(int r, int c, std::int64_t v) {
    v %= p_;
    if (v < 0) v += p_;
    data_[static_cast<std::size_t>(r) * cols_ + c] = v;
}

std::int64_t ModMatrix::inv_mod(std::int64_t a) const {
    // Fermat; p_ is prime and a != 0 mod p_.
    std::int64_t result = 1, base = a % p_, e = p_ - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return result;
}

int ModMatrix::column_rank(const std::vector<int>& cols) const {
    for (int c : cols)
        if (c < 0 || c >= cols_) throw InputError("column index out of range");
    // Gaussian elimination on the selected columns.
    std::vector<std::vector<std::int64_t>> work(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) {
        work[r].resize(cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) work[r][j] = at(r, cols[j]);
    }
    int rank = 0;
    for (std::size_t j = 0; j < cols.size() && rank < rows_; ++j) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (work[r][j] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(work[rank], work[pivot]);
        std::int64_t inv = inv_mod(work[rank][j]);
        for (std::size_t jj = j; jj < cols.size(); ++jj)
            work[rank][jj] = work[rank][jj] * inv % p_;
        for (int r = 0; r < rows_; ++r) {
            if (r == rank || work[r][j] == 0) continue;
            std::int64_t f = work[r][j];
            for (std::size_t jj = j; jj < cols.size(); ++jj) {
                work[r][jj] = (work[r][jj] - f * work[rank][jj]) % p_;
                if (work[r][jj] < 0) work[r][jj] += p_;
            }
        }
        ++rank;
    }
    return rank;
}

bool ModMatrix::columns_independent(const std::vector<int>& cols) const {
    return column_rank(cols) == static_cast<int>(cols.size());
}

int ModMatrix::rank() const {
    std::vector<int> all(static_cast<std::size_t>(cols_));
    for (int c = 0; c < cols_; ++c) all[c] = c;
    return column_rank(all);
}

ModMatrix ModMatrix::rref_nonzero_rows() const {
    std::vector<std::vector<std::int64_t>> work(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) {
        work[r].resize(static_cast<std::size_t>(cols_));
        for (int c = 0; c < cols_; ++c) work[r][c] = at(r, c);
    }
    int lead = 0;
    for (int c = 0; c < cols_ && lead < rows_; ++c) {
        int pivot = -1;
        for (int r = lead; r < rows_; ++r)
            if (work[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(work[lead], work[pivot]);
        std::int64_t inv = inv_mod(work[lead][c]);
        for (int cc = 0; cc < cols_; ++cc) work[lead][cc] = work[lead][cc] * inv % p_;
        for (int r = 0; r < rows_; ++r) {
            if (r == lead || work[r][c] == 0) continue;
            std::int64_t f = work[r][c];
            for (int cc = 0; cc < cols_; ++cc) {
                work[r][cc] = (work[r][cc] - f * work[lead][cc]) % p_;
                if (work[r][cc] < 0) work[r][cc] += p_;
            }
        }
        ++lead;
    }
    std::vector<std::vector<std::int64_t>> rows;
    for (int r = 0; r < lead; ++r) rows.push_back(work[r]);
    if (rows.empty()) return ModMatrix(0, cols_, p_);
    return ModMatrix(rows, p_);
}

ModMatrix ModMatrix::select_columns(const std::vector<int>& cols) const {
    ModMatrix out(rows_, static_cast<int>(cols.size()), p_);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] < 0 || cols[j] >= cols_) throw InputError("column index out of range");
        for (int r = 0; r < rows_; ++r) out.set(r, static_cast<int>(j), at(r, cols[j]));
    }
    return out;
}

ModMatrix ModMatrix::contract_columns(const std::vector<int>& contract) const {
    for (int c : contract)
        if (c < 0 || c >= cols_) throw InputError("column index out of range");
    std::vector<bool> is_contracted(static_cast<std::size_t>(cols_), false);
    for (int c : contract) is_contracted[static_cast<std::size_t>(c)] = true;

    // Pivot on a maximal independent subset of the contracted columns
    // (greedy, ascending): those rows then carry exactly the contracted part.
    std::vector<std::vector<std::int64_t>> work(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) {
        work[r].resize(static_cast<std::size_t>(cols_));
        for (int c = 0; c < cols_; ++c) work[r][c] = at(r, c);
    }
    int lead = 0;
    for (int c : contract) {
        int pivot = -1;
        for (int r = lead; r < rows_; ++r)
            if (work[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;  // dependent on earlier contracted columns (a loop in the minor)
        std::swap(work[lead], work[pivot]);
        std::int64_t inv = inv_mod(work[lead][c]);
        for (int cc = 0; cc < cols_; ++cc) work[lead][cc] = work[lead][cc] * inv % p_;
        for (int r = 0; r < rows_; ++r) {
            if (r == lead || work[r][c] == 0) continue;
            std::int64_t f = work[r][c];
            for (int cc = 0; cc < cols_; ++cc) {
                work[r][cc] = (work[r][cc] - f * work[lead][cc]) % p_;
                if (work[r][cc] < 0) work[r][cc] += p_;
            }
        }
        ++lead;
    }
    ModMatrix out(rows_ - lead, cols_ - static_cast<int>(contract.size()), p_);
    int oc = 0;
    for (int c = 0; c < cols_; ++c) {
        if (is_contracted[static_cast<std::size_t>(c)]) continue;
        for (int r = lead; r < rows_; ++r) out.set(r - lead, oc, work[r][c]);
        ++oc;
    }
    return out;
}

ModMatrix ModMatrix::dual_representation() const {
    // Bring to the form where some basis B of columns carries an identity,
    // then M* = [-D^T on B | I on the complement], columns kept in place.
    ModMatrix r = rref_nonzero_rows();
    int rk = r.rows();
    int n = cols_;
    // Locate pivot columns of the RREF.
    std::vector<int> pivot_col(static_cast<std::size_t>(rk), -1);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int row = 0, c = 0; row < rk; ++row) {
        while (c < n && r.at(row, c) == 0) ++c;
        assert(c < n);
        pivot_col[static_cast<std::size_t>(row)] = c;
        is_pivot[static_cast<std::size_t>(c)] = true;
    }
    ModMatrix out(n - rk, n, p_);
    int free_idx = 0;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[static_cast<std::size_t>(c)]) continue;
        // Row `free_idx` of the dual: identity at column c, -D^T on pivots.
        out.set(free_idx, c, 1);
        for (int row = 0; row < rk; ++row)
            out.set(free_idx, pivot_col[static_cast<std::size_t>(row)], -r.at(row, c));
        ++free_idx;
    }
    return out;
}

}  // namespace diversol
