#ifndef KMM_CERTIFICATE_HPP
#define KMM_CERTIFICATE_HPP

#include <utility>
#include <vector>

#include "kmm/matrix.hpp"

namespace kmm {

/// A set of lines of an n x n matrix: flagged rows (horizontal lines)
/// and flagged columns (vertical lines). Serializes to the 2 x n form
/// with row flags on top and column flags below.
class Cover {
public:
    Cover() = default;
    Cover(std::vector<std::uint8_t> row_flags, std::vector<std::uint8_t> col_flags);
    static Cover empty(index_t n);
    static Cover all_rows(index_t n);

    index_t n() const { return row_flags_.size(); }
    index_t size() const;
    bool row(index_t i) const { return row_flags_[i] != 0; }
    bool col(index_t j) const { return col_flags_[j] != 0; }
    const std::vector<std::uint8_t>& row_flags() const { return row_flags_; }
    const std::vector<std::uint8_t>& col_flags() const { return col_flags_; }

    Cover with_row(index_t i) const;
    Cover with_col(index_t j) const;

    BoolMatrix to_two_row_matrix() const;

    friend bool operator==(const Cover& a, const Cover& b) {
        return a.row_flags_ == b.row_flags_ && a.col_flags_ == b.col_flags_;
    }

private:
    std::vector<std::uint8_t> row_flags_, col_flags_;
};

/// A set of positions of an n x n matrix, no two sharing a row and no
/// two sharing a column (a sub-permutation). Line-disjointness is
/// enforced on construction; picks are kept sorted.
class Selection {
public:
    Selection() = default;
    Selection(index_t n, std::vector<std::pair<index_t, index_t>> picks);
    static Selection empty(index_t n) { return Selection(n, {}); }

    index_t n() const { return n_; }
    index_t size() const { return picks_.size(); }
    const std::vector<std::pair<index_t, index_t>>& picks() const { return picks_; }

    friend bool operator==(const Selection& a, const Selection& b) {
        return a.n_ == b.n_ && a.picks_ == b.picks_;
    }

private:
    index_t n_ = 0;
    std::vector<std::pair<index_t, index_t>> picks_;
};

/// True iff every 1 of A lies on a flagged line. A must be square with
/// side alpha.n().
bool is_cover(const BoolMatrix& a, const Cover& alpha);

/// True iff every pick sits on a 1 of A. (Line-disjointness already
/// holds by the Selection invariant.) A must be square with side beta.n().
bool is_selection(const BoolMatrix& a, const Selection& beta);

/// Transport certificates along A -> PAQ. is_cover / is_selection are
/// invariant: is_cover(A, alpha) iff is_cover(PAQ, permute_cover(alpha, P, Q)).
Cover permute_cover(const Cover& alpha, const PermutationMatrix& p, const PermutationMatrix& q);
Selection permute_selection(const Selection& beta, const PermutationMatrix& p,
                            const PermutationMatrix& q);

} // namespace kmm

#endif
