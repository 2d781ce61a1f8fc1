#include "kmm/diagonal.hpp"

namespace kmm {

bool has_diagonal_property(const BoolMatrix& a) {
    if (!a.square()) throw invalid_input("has_diagonal_property: non-square matrix");
    const index_t n = a.rows();
    for (index_t i = 0; i < n; ++i) {
        if (a.at(i, i)) continue;
        for (index_t j = i; j < n; ++j)
            if (a.at(i, j) || a.at(j, i)) return false;
    }
    return true;
}

DiagonalizationResult diagonalize(const BoolMatrix& a) {
    if (!a.square()) throw invalid_input("diagonalize: non-square matrix");
    const index_t n = a.rows();
    BoolMatrix cur = a;
    PermutationMatrix p = PermutationMatrix::identity(n);
    PermutationMatrix q = PermutationMatrix::identity(n);

    for (index_t i = 0; i < n; ++i) {
        if (cur.at(i, i)) continue;
        bool fixed = false;
        for (index_t j = i; j < n && !fixed; ++j) {
            if (cur.at(i, j)) {
                // swap columns i and j: cur <- cur * T, Q <- Q * T
                auto t = PermutationMatrix::transposition(n, i, j);
                cur = apply_permutations(cur, PermutationMatrix::identity(n), t);
                q = q.compose(t);
                fixed = true;
            }
        }
        for (index_t j = i + 1; j < n && !fixed; ++j) {
            if (cur.at(j, i)) {
                // swap rows i and j: cur <- T * cur, P <- T * P
                auto t = PermutationMatrix::transposition(n, i, j);
                cur = apply_permutations(cur, t, PermutationMatrix::identity(n));
                p = t.compose(p);
                fixed = true;
            }
        }
        // no 1 in this layer: nothing to do
    }
    return DiagonalizationResult{std::move(p), std::move(q), std::move(cur)};
}

} // namespace kmm
