#include "kmm/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace kmm {

BoolMatrix::BoolMatrix(index_t rows, index_t cols, std::vector<std::uint8_t> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
        throw invalid_input("BoolMatrix: entry count does not match rows*cols");
    for (auto v : data_)
        if (v > 1) throw invalid_input("BoolMatrix: entries must be 0 or 1");
}

BoolMatrix BoolMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    index_t r = rows.size();
    index_t c = r == 0 ? 0 : rows[0].size();
    std::vector<std::uint8_t> data;
    data.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw invalid_input("BoolMatrix: ragged rows");
        for (int v : row) {
            if (v != 0 && v != 1) throw invalid_input("BoolMatrix: entries must be 0 or 1");
            data.push_back(static_cast<std::uint8_t>(v));
        }
    }
    return BoolMatrix(r, c, std::move(data));
}

BoolMatrix BoolMatrix::identity(index_t n) {
    BoolMatrix m(n, n);
    for (index_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BoolMatrix BoolMatrix::transpose() const {
    BoolMatrix t(cols_, rows_);
    for (index_t r = 0; r < rows_; ++r)
        for (index_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

BoolMatrix BoolMatrix::first_row_tail() const {
    if (empty()) throw invalid_input("first_row_tail: empty matrix");
    BoolMatrix r(1, cols_ - 1);
    for (index_t c = 1; c < cols_; ++c) r.set(0, c - 1, at(0, c));
    return r;
}

BoolMatrix BoolMatrix::first_col_tail() const {
    if (empty()) throw invalid_input("first_col_tail: empty matrix");
    BoolMatrix s(rows_ - 1, 1);
    for (index_t r = 1; r < rows_; ++r) s.set(r - 1, 0, at(r, 0));
    return s;
}

BoolMatrix BoolMatrix::principal_submatrix() const {
    if (empty()) throw invalid_input("principal_submatrix: empty matrix");
    BoolMatrix m(rows_ - 1, cols_ - 1);
    for (index_t r = 1; r < rows_; ++r)
        for (index_t c = 1; c < cols_; ++c) m.set(r - 1, c - 1, at(r, c));
    return m;
}

BoolMatrix BoolMatrix::with_columns_zeroed(const std::vector<std::uint8_t>& col_flags) const {
    if (col_flags.size() != cols_) throw invalid_input("with_columns_zeroed: flag count mismatch");
    BoolMatrix m = *this;
    for (index_t c = 0; c < cols_; ++c)
        if (col_flags[c])
            for (index_t r = 0; r < rows_; ++r) m.set(r, c, false);
    return m;
}

BoolMatrix BoolMatrix::with_rows_zeroed(const std::vector<std::uint8_t>& row_flags) const {
    if (row_flags.size() != rows_) throw invalid_input("with_rows_zeroed: flag count mismatch");
    BoolMatrix m = *this;
    for (index_t r = 0; r < rows_; ++r)
        if (row_flags[r])
            for (index_t c = 0; c < cols_; ++c) m.set(r, c, false);
    return m;
}

BoolMatrix BoolMatrix::padded_to(index_t rows, index_t cols) const {
    if (rows < rows_ || cols < cols_) throw invalid_input("padded_to: target smaller than source");
    BoolMatrix m(rows, cols);
    for (index_t r = 0; r < rows_; ++r)
        for (index_t c = 0; c < cols_; ++c) m.set(r, c, at(r, c));
    return m;
}

std::uint64_t BoolMatrix::row_mask(index_t r) const {
    if (cols_ > 64) throw invalid_input("row_mask: more than 64 columns");
    std::uint64_t m = 0;
    for (index_t c = 0; c < cols_; ++c)
        if (at(r, c)) m |= (std::uint64_t{1} << c);
    return m;
}

index_t sum_entries(const BoolMatrix& a) {
    return static_cast<index_t>(
        std::accumulate(a.data().begin(), a.data().end(), std::size_t{0}));
}

PermutationMatrix::PermutationMatrix(std::vector<index_t> target) : target_(std::move(target)) {
    std::vector<std::uint8_t> seen(target_.size(), 0);
    for (index_t t : target_) {
        if (t >= target_.size() || seen[t])
            throw invalid_input("PermutationMatrix: mapping is not a bijection");
        seen[t] = 1;
    }
}

PermutationMatrix PermutationMatrix::identity(index_t n) {
    std::vector<index_t> t(n);
    std::iota(t.begin(), t.end(), index_t{0});
    return PermutationMatrix(std::move(t));
}

PermutationMatrix PermutationMatrix::transposition(index_t n, index_t a, index_t b) {
    if (a >= n || b >= n) throw invalid_input("transposition: index out of range");
    std::vector<index_t> t(n);
    std::iota(t.begin(), t.end(), index_t{0});
    std::swap(t[a], t[b]);
    return PermutationMatrix(std::move(t));
}

PermutationMatrix PermutationMatrix::inverse() const {
    std::vector<index_t> inv(target_.size());
    for (index_t i = 0; i < target_.size(); ++i) inv[target_[i]] = i;
    return PermutationMatrix(std::move(inv));
}

PermutationMatrix PermutationMatrix::compose(const PermutationMatrix& g) const {
    if (size() != g.size()) throw invalid_input("compose: size mismatch");
    std::vector<index_t> t(size());
    for (index_t i = 0; i < size(); ++i) t[i] = target_[g.target_[i]];
    return PermutationMatrix(std::move(t));
}

BoolMatrix PermutationMatrix::to_bool_matrix() const {
    BoolMatrix m(size(), size());
    for (index_t i = 0; i < size(); ++i) m.set(target_[i], i, true);
    return m;
}

bool PermutationMatrix::is_identity() const {
    for (index_t i = 0; i < size(); ++i)
        if (target_[i] != i) return false;
    return true;
}

BoolMatrix apply_permutations(const BoolMatrix& a, const PermutationMatrix& p,
                              const PermutationMatrix& q) {
    if (p.size() != a.rows() || q.size() != a.cols())
        throw invalid_input("apply_permutations: size mismatch");
    const PermutationMatrix pinv = p.inverse();
    BoolMatrix out(a.rows(), a.cols());
    // (PAQ)(i,j) = A(p^-1(i), q(j))
    for (index_t i = 0; i < a.rows(); ++i) {
        index_t src_row = pinv.apply(i);
        for (index_t j = 0; j < a.cols(); ++j) out.set(i, j, a.at(src_row, q.apply(j)));
    }
    return out;
}

} // namespace kmm
