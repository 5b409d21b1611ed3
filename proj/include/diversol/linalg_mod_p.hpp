#ifndef DIVERSOL_LINALG_MOD_P_HPP
#define DIVERSOL_LINALG_MOD_P_HPP

#include <cstdint>
#include <vector>

#include "diversol/sets.hpp"

namespace diversol {

// Dense matrix over GF(p), p a small prime. Entries are stored reduced.
class ModMatrix {
public:
    ModMatrix() = default;
    ModMatrix(int rows, int cols, std::int64_t p);
    ModMatrix(std::vector<std::vector<std::int64_t>> entries, std::int64_t p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::int64_t modulus() const { return p_; }

    std::int64_t at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    void set(int r, int c, std::int64_t v);

    // Rank of the column submatrix selected by `cols` (ids into 0..cols()-1).
    int column_rank(const std::vector<int>& cols) const;
    bool columns_independent(const std::vector<int>& cols) const;

    int rank() const;

    // Reduced row echelon form; zero rows dropped. Column order unchanged.
    ModMatrix rref_nonzero_rows() const;

    // Representation of the deletion minor: keep exactly the listed columns,
    // in the given order.
    ModMatrix select_columns(const std::vector<int>& cols) const;

    // Representation of the contraction minor M/X for the columns in
    // `contract` (positions). Pivots on a maximal independent subset of
    // `contract`, removes the pivot rows and all contracted columns. The
    // surviving columns keep their relative order.
    ModMatrix contract_columns(const std::vector<int>& contract) const;

    // Standard-form complement: a representation of the dual matroid on the
    // same column ids.
    ModMatrix dual_representation() const;

    bool operator==(const ModMatrix& other) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::int64_t p_ = 2;
    std::vector<std::int64_t> data_;

    std::int64_t inv_mod(std::int64_t a) const;
};

bool is_prime(std::int64_t p);

}  // namespace diversol

#endif
