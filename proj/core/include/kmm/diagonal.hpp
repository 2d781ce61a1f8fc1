#ifndef KMM_DIAGONAL_HPP
#define KMM_DIAGONAL_HPP

#include "kmm/matrix.hpp"

namespace kmm {

/// P, Q and PAQ such that the transform has the diagonal property.
struct DiagonalizationResult {
    PermutationMatrix p, q;
    BoolMatrix transformed;
};

/// True iff for every i, either A(i,i) = 1 or layer i is all-zero,
/// where layer i consists of A(i,j) for j >= i and A(j,i) for j > i.
/// Rejects non-square matrices.
bool has_diagonal_property(const BoolMatrix& a);

/// Establish the diagonal property by composing row/column
/// transpositions, one layer at a time. Within layer i the row segment
/// (i, i..n-1) is scanned before the column segment (i+1..n-1, i), and
/// the first 1 found is swapped into (i,i); settled layers are never
/// disturbed. Rejects non-square matrices.
DiagonalizationResult diagonalize(const BoolMatrix& a);

} // namespace kmm

#endif
