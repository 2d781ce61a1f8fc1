#ifndef KMM_MATRIX_HPP
#define KMM_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kmm/errors.hpp"

namespace kmm {

using index_t = std::size_t;

/// Dense 0-1 matrix, row-major. Rectangular shapes (including 0xk and
/// kx0) are valid; every entry is 0 or 1, enforced on construction.
/// Indices are 0-based in code; external formats are 1-based.
class BoolMatrix {
public:
    BoolMatrix() : rows_(0), cols_(0) {}
    BoolMatrix(index_t rows, index_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    BoolMatrix(index_t rows, index_t cols, std::vector<std::uint8_t> entries);

    /// Build from nested initializer-style rows; all rows must have equal length.
    static BoolMatrix from_rows(const std::vector<std::vector<int>>& rows);
    static BoolMatrix identity(index_t n);

    index_t rows() const { return rows_; }
    index_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    std::uint8_t at(index_t r, index_t c) const { return data_[r * cols_ + c]; }
    void set(index_t r, index_t c, bool v) { data_[r * cols_ + c] = v ? 1 : 0; }

    const std::vector<std::uint8_t>& data() const { return data_; }

    BoolMatrix transpose() const;

    /// Top-left entry / first-row tail / first-column tail / principal
    /// submatrix, matching the (a, R, S, M) block decomposition used by
    /// the recursive sum and solver code. Requires a nonempty matrix.
    std::uint8_t top_left() const { return at(0, 0); }
    BoolMatrix first_row_tail() const;  // 1 x (cols-1)
    BoolMatrix first_col_tail() const;  // (rows-1) x 1
    BoolMatrix principal_submatrix() const;

    /// Copy with the flagged columns (resp. rows) forced to all-zero.
    BoolMatrix with_columns_zeroed(const std::vector<std::uint8_t>& col_flags) const;
    BoolMatrix with_rows_zeroed(const std::vector<std::uint8_t>& row_flags) const;

    /// Copy extended with zero rows/columns at the bottom/right.
    BoolMatrix padded_to(index_t rows, index_t cols) const;

    /// Row as a bitmask (cols <= 64).
    std::uint64_t row_mask(index_t r) const;

    friend bool operator==(const BoolMatrix& a, const BoolMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    index_t rows_, cols_;
    std::vector<std::uint8_t> data_;
};

/// Number of 1s in A. Agrees with the recursive row/column/block
/// decomposition (checked in the test suite); the empty matrix sums to 0.
index_t sum_entries(const BoolMatrix& a);

/// A permutation of {0..n-1}. target()[i] = j means position i is sent
/// to position j: as a matrix, column i holds its 1 in row target[i],
/// so left-multiplying sends row i of the operand to row target[i].
class PermutationMatrix {
public:
    PermutationMatrix() = default;
    explicit PermutationMatrix(std::vector<index_t> target);

    static PermutationMatrix identity(index_t n);
    static PermutationMatrix transposition(index_t n, index_t a, index_t b);

    index_t size() const { return target_.size(); }
    index_t apply(index_t i) const { return target_[i]; }
    const std::vector<index_t>& target() const { return target_; }

    PermutationMatrix inverse() const;
    /// Matrix-product composition: (f.compose(g)) acts like f after g.
    PermutationMatrix compose(const PermutationMatrix& g) const;

    BoolMatrix to_bool_matrix() const;
    bool is_identity() const;

    friend bool operator==(const PermutationMatrix& a, const PermutationMatrix& b) {
        return a.target_ == b.target_;
    }

private:
    std::vector<index_t> target_;
};

/// P*A*Q. P permutes rows (row i of A lands at row P.apply(i)); Q acts
/// on columns from the right (column j of the result is column
/// Q.apply(j) of A). Sizes must match; sum_entries is preserved.
BoolMatrix apply_permutations(const BoolMatrix& a, const PermutationMatrix& p,
                              const PermutationMatrix& q);

} // namespace kmm

#endif
