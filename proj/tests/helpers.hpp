#ifndef KMM_TESTS_HELPERS_HPP
#define KMM_TESTS_HELPERS_HPP

#include <utility>
#include <vector>

#include "kmm/certificate.hpp"
#include "kmm/generate.hpp"
#include "kmm/matrix.hpp"

namespace kmm::test {

inline PermutationMatrix random_permutation(index_t n, Rng& rng) {
    std::vector<index_t> t(n);
    for (index_t i = 0; i < n; ++i) t[i] = i;
    for (index_t i = n; i > 1; --i) std::swap(t[i - 1], t[rng.below(i)]);
    return PermutationMatrix(std::move(t));
}

/// Tiny independent minimum-cover search: all 2^(2n) line subsets,
/// plain loops, no shared code with the library path it checks.
inline index_t brute_min_cover_size(const BoolMatrix& a) {
    const index_t n = a.rows();
    index_t best = 2 * n + 1;
    for (std::uint32_t bits = 0; bits < (1u << (2 * n)); ++bits) {
        bool covers = true;
        for (index_t i = 0; i < n && covers; ++i)
            for (index_t j = 0; j < n && covers; ++j)
                if (a.at(i, j) && !((bits >> i) & 1) && !((bits >> (n + j)) & 1)) covers = false;
        if (!covers) continue;
        index_t size = 0;
        for (index_t k = 0; k < 2 * n; ++k) size += (bits >> k) & 1;
        if (size < best) best = size;
    }
    return best;
}

/// Tiny independent maximum-selection search over all partial
/// permutations restricted to 1-entries.
inline index_t brute_max_selection_size(const BoolMatrix& a) {
    const index_t n = a.rows();
    std::vector<index_t> col_used(n, 0);
    index_t best = 0;
    auto go = [&](auto&& self, index_t row, index_t picked) -> void {
        if (picked > best) best = picked;
        if (row == n) return;
        self(self, row + 1, picked);
        for (index_t c = 0; c < n; ++c)
            if (a.at(row, c) && !col_used[c]) {
                col_used[c] = 1;
                self(self, row + 1, picked + 1);
                col_used[c] = 0;
            }
    };
    go(go, 0, 0);
    return best;
}

/// All n x n 0-1 matrices, for exhaustive sweeps at n <= 4.
inline BoolMatrix nth_matrix(index_t n, std::uint64_t bits) {
    BoolMatrix m(n, n);
    for (index_t k = 0; k < n * n; ++k)
        if ((bits >> k) & 1) m.set(k / n, k % n, true);
    return m;
}

} // namespace kmm::test

#endif
