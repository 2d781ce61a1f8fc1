#ifndef KMM_SOLVER_HPP
#define KMM_SOLVER_HPP

#include "kmm/certificate.hpp"
#include "kmm/matrix.hpp"

namespace kmm {

/// Counters for the selection construction's compensation machinery
/// (see max_selection): how often a lifted pick collided with an added
/// pick, how often single-swap repair settled it, and how often the
/// exhaustive fallback had to decide the sub-instance.
struct SolveStats {
    std::size_t bii_conflicts = 0;
    std::size_t bii_repairs = 0;
    std::size_t oracle_fallbacks = 0;
};

struct SolverOptions {
    /// Cap on the input side length. The recursion explores up to three
    /// sub-instances per level with no memoization, so the worst case is
    /// exponential; callers opting into larger inputs raise the cap.
    index_t recursion_cap = 16;
    SolveStats* stats = nullptr;
};

struct KmmReport {
    Cover cover;
    Selection selection;
    index_t l = 0;
    index_t o = 0;
    bool equal = false;
};

/// Minimal cover via the recursion induced by the min-max proof:
/// diagonalize, solve the principal submatrix, then close the first
/// layer. With A in diagonal form and M its principal submatrix:
///   a = 0: extend M's cover (layer 1 is empty).
///   a = 1: if M minus the columns flagged by the first-row tail R has
///          a cover of size l_M - sum(R), rebuild from it plus the
///          R-columns and add the first column; else mirror with the
///          first-column tail S and the first row; else extend any
///          minimal cover of M and add both the first row and column.
/// The feasibility tests recurse on the column/row-zeroed copies.
/// Finally the cover is carried back through P,Q.
Cover min_cover(const BoolMatrix& a, const SolverOptions& opts = {});

/// Maximal selection via the same induction, realized case by case:
///   layer 1 empty: lift M's selection.
///   a = 1, l_M = n-1: lift and add the corner pick.
///   a = 1, extended cover of M covers all of R or all of S: lift and
///          add the corner pick.
///   otherwise: lift, then add one R-1 and one S-1 whose lines the
///          extended cover misses. A lifted pick can collide with an
///          added pick; collisions are repaired by single swaps along
///          the colliding pick's covering line, and if no choice of
///          added picks can be repaired the sub-instance falls back to
///          the exhaustive search (counted in SolveStats).
Selection max_selection(const BoolMatrix& a, const SolverOptions& opts = {});

/// Run both, validate the certificates, and report l, o and l == o.
KmmReport kmm_check(const BoolMatrix& a, const SolverOptions& opts = {});

} // namespace kmm

#endif
