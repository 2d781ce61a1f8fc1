#ifndef KMM_LA_CATALOG_HPP
#define KMM_LA_CATALOG_HPP

#include <string>
#include <vector>

#include "kmm/la/ast.hpp"

namespace kmm::la {

struct NamedFormula {
    std::string name;
    FormulaPtr formula;
    std::vector<std::string> free_vars;
    std::string note;
};

/// Formula-level transcriptions of the combinatorial predicates, for
/// cross-checking against the native implementations:
///   cover        Cover(A, Alpha)           Alpha is the 2 x n line matrix
///   select       Select(A, Beta)           Beta a sub-permutation matrix
///   path         Path(A, x, y, Alpha)      Alpha the padded internal-vertex
///                                          encoding; vertices x, y are the
///                                          two highest-numbered ones
///   disjoint     Disjoint(A, x, y, Alpha, Alpha2)
///   sdr          SDR(A)                    an existential permutation query
///   chain        Chain(A, Alpha)           Alpha a 1 x n element mask over a
///                                          strict-order matrix A
std::vector<NamedFormula> predicate_catalog();

const NamedFormula& catalog_formula(const std::string& name);

} // namespace kmm::la

#endif
