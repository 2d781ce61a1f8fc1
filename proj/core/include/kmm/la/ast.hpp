#ifndef KMM_LA_AST_HPP
#define KMM_LA_AST_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kmm::la {

/// The three sorts: indices (naturals), ring elements (here: integers),
/// and matrices over the ring.
enum class Sort { Index, Ring, Matrix };
const char* sort_name(Sort s);

/// Sort of a variable, fixed by its spelling: names starting with an
/// uppercase letter are matrices; names starting with i..n, p, q, x, y
/// or z are indices; the remaining lowercase names are ring elements.
std::optional<Sort> variable_sort(std::string_view name);

struct SourcePos {
    std::size_t line = 0, column = 0;  // 1-based; 0,0 for synthesized nodes
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;
struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    enum class Kind {
        Literal,  // nonnegative numeral, optionally sort-suffixed
        Var,
        Add, Sub, Mul,  // index or ring; index subtraction cuts off at 0
        Div, Rem,       // index
        Neg, Inv,       // ring: additive inverse, total multiplicative "inverse"
        Rows, Cols,     // matrix -> index
        Entry,          // e(T, m, n) -> ring, 0 outside the matrix
        Sum,            // Sigma(T) -> ring
        Cond,           // cond(phi, t, u); guard atoms are index-sorted
        Lambda,         // lambda i j <m, n, t> -> matrix
    };

    Kind kind;
    long long value = 0;
    std::optional<Sort> literal_suffix;
    std::string name;          // Var
    std::string bind_i, bind_j;  // Lambda binders (index variables)
    std::vector<TermPtr> args;   // operands; Lambda: {m, n, t}
    FormulaPtr guard;            // Cond
    SourcePos pos;

    // set by typecheck
    mutable Sort sort = Sort::Index;
    mutable bool sort_known = false;
};

struct Formula {
    enum class Kind {
        Le, Eq,  // atoms; Eq covers all three sorts, resolved by typecheck
        Not, And, Or, Implies, Iff,
        ForallIndex, ExistsIndex,    // var, bound, kids[0]
        ForallMatrix, ExistsMatrix,  // quantified matrices range over 0-1 entries
    };

    Kind kind;
    TermPtr lhs, rhs;    // atom operands; quantifier bound lives in lhs
    std::vector<FormulaPtr> kids;
    std::string var;     // quantified variable
    SourcePos pos;

    mutable Sort eq_sort = Sort::Index;  // for Eq, set by typecheck
};

// Builders (positions default to synthesized).
TermPtr lit(long long v);
TermPtr lit_sorted(long long v, Sort s);
TermPtr var(std::string name);
TermPtr add(TermPtr a, TermPtr b);
TermPtr sub(TermPtr a, TermPtr b);
TermPtr mul(TermPtr a, TermPtr b);
TermPtr div_term(TermPtr a, TermPtr b);
TermPtr rem_term(TermPtr a, TermPtr b);
TermPtr neg(TermPtr a);
TermPtr inv(TermPtr a);
TermPtr rows(TermPtr m);
TermPtr cols(TermPtr m);
TermPtr entry(TermPtr m, TermPtr i, TermPtr j);
TermPtr sum_term(TermPtr m);
TermPtr cond(FormulaPtr guard, TermPtr t, TermPtr u);
TermPtr lam(std::string i, std::string j, TermPtr m, TermPtr n, TermPtr body);

FormulaPtr le(TermPtr a, TermPtr b);
FormulaPtr eq(TermPtr a, TermPtr b);
FormulaPtr lnot(FormulaPtr f);
FormulaPtr land(FormulaPtr a, FormulaPtr b);
FormulaPtr lor(FormulaPtr a, FormulaPtr b);
FormulaPtr implies(FormulaPtr a, FormulaPtr b);
FormulaPtr iff(FormulaPtr a, FormulaPtr b);
FormulaPtr forall_index(std::string v, TermPtr bound, FormulaPtr body);
FormulaPtr exists_index(std::string v, TermPtr bound, FormulaPtr body);
FormulaPtr forall_matrix(std::string v, TermPtr bound, FormulaPtr body);
FormulaPtr exists_matrix(std::string v, TermPtr bound, FormulaPtr body);

/// Conjunction / disjunction over a list (empty list is not allowed).
FormulaPtr land_all(std::vector<FormulaPtr> fs);

/// Structural equality, ignoring positions and annotations.
bool same_term(const TermPtr& a, const TermPtr& b);
bool same_formula(const FormulaPtr& a, const FormulaPtr& b);

/// Substitute terms for free variables (binders shadow; the
/// replacements must not mention any binder they are substituted
/// under).
TermPtr subst_term(const TermPtr& t, const std::vector<std::pair<std::string, TermPtr>>& map);
FormulaPtr subst_formula(const FormulaPtr& f,
                         const std::vector<std::pair<std::string, TermPtr>>& map);

/// Free variables of the given sort-class (by spelling).
void collect_free_vars(const TermPtr& t, std::vector<std::string>& out);
void collect_free_vars(const FormulaPtr& f, std::vector<std::string>& out);
bool mentions_var(const TermPtr& t, std::string_view name);

} // namespace kmm::la

#endif
