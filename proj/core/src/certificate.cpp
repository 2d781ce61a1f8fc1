#include "kmm/certificate.hpp"

#include <algorithm>
#include <numeric>

namespace kmm {

Cover::Cover(std::vector<std::uint8_t> row_flags, std::vector<std::uint8_t> col_flags)
    : row_flags_(std::move(row_flags)), col_flags_(std::move(col_flags)) {
    if (row_flags_.size() != col_flags_.size())
        throw invalid_input("Cover: row/col flag lengths differ");
    for (auto v : row_flags_)
        if (v > 1) throw invalid_input("Cover: flags must be 0 or 1");
    for (auto v : col_flags_)
        if (v > 1) throw invalid_input("Cover: flags must be 0 or 1");
}

Cover Cover::empty(index_t n) {
    return Cover(std::vector<std::uint8_t>(n, 0), std::vector<std::uint8_t>(n, 0));
}

Cover Cover::all_rows(index_t n) {
    return Cover(std::vector<std::uint8_t>(n, 1), std::vector<std::uint8_t>(n, 0));
}

index_t Cover::size() const {
    auto count = [](const std::vector<std::uint8_t>& v) {
        return static_cast<index_t>(std::accumulate(v.begin(), v.end(), std::size_t{0}));
    };
    return count(row_flags_) + count(col_flags_);
}

Cover Cover::with_row(index_t i) const {
    Cover c = *this;
    c.row_flags_[i] = 1;
    return c;
}

Cover Cover::with_col(index_t j) const {
    Cover c = *this;
    c.col_flags_[j] = 1;
    return c;
}

BoolMatrix Cover::to_two_row_matrix() const {
    BoolMatrix m(2, n());
    for (index_t j = 0; j < n(); ++j) {
        m.set(0, j, row_flags_[j]);
        m.set(1, j, col_flags_[j]);
    }
    return m;
}

Selection::Selection(index_t n, std::vector<std::pair<index_t, index_t>> picks)
    : n_(n), picks_(std::move(picks)) {
    std::sort(picks_.begin(), picks_.end());
    std::vector<std::uint8_t> row_used(n_, 0), col_used(n_, 0);
    for (auto [r, c] : picks_) {
        if (r >= n_ || c >= n_) throw invalid_input("Selection: pick out of range");
        if (row_used[r] || col_used[c])
            throw invalid_input("Selection: two picks share a line");
        row_used[r] = 1;
        col_used[c] = 1;
    }
}

bool is_cover(const BoolMatrix& a, const Cover& alpha) {
    if (!a.square() || a.rows() != alpha.n())
        throw invalid_input("is_cover: dimension mismatch");
    for (index_t i = 0; i < a.rows(); ++i) {
        if (alpha.row(i)) continue;
        for (index_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) && !alpha.col(j)) return false;
    }
    return true;
}

bool is_selection(const BoolMatrix& a, const Selection& beta) {
    if (!a.square() || a.rows() != beta.n())
        throw invalid_input("is_selection: dimension mismatch");
    for (auto [r, c] : beta.picks())
        if (!a.at(r, c)) return false;
    return true;
}

Cover permute_cover(const Cover& alpha, const PermutationMatrix& p, const PermutationMatrix& q) {
    if (p.size() != alpha.n() || q.size() != alpha.n())
        throw invalid_input("permute_cover: size mismatch");
    std::vector<std::uint8_t> rows(alpha.n()), cols(alpha.n());
    // Row i of A lands at row p(i) of PAQ; column j of PAQ is column q(j) of A.
    for (index_t i = 0; i < alpha.n(); ++i) rows[p.apply(i)] = alpha.row_flags()[i];
    for (index_t j = 0; j < alpha.n(); ++j) cols[j] = alpha.col_flags()[q.apply(j)];
    return Cover(std::move(rows), std::move(cols));
}

Selection permute_selection(const Selection& beta, const PermutationMatrix& p,
                            const PermutationMatrix& q) {
    if (p.size() != beta.n() || q.size() != beta.n())
        throw invalid_input("permute_selection: size mismatch");
    const PermutationMatrix qinv = q.inverse();
    std::vector<std::pair<index_t, index_t>> picks;
    picks.reserve(beta.size());
    for (auto [r, c] : beta.picks()) picks.emplace_back(p.apply(r), qinv.apply(c));
    return Selection(beta.n(), std::move(picks));
}

} // namespace kmm
