#ifndef KMM_LA_PARSER_HPP
#define KMM_LA_PARSER_HPP

#include <string>
#include <variant>

#include "kmm/la/ast.hpp"

namespace kmm::la {

/// Syntax error with a 1-based source position baked into the message.
class parse_error : public std::invalid_argument {
public:
    parse_error(const std::string& message, SourcePos pos);
    SourcePos pos;
};

/// Concrete ASCII syntax, e.g.
///   e(A, i, j) + 1_ring
///   Sigma(lambda i j <2, 2, 1>)
///   cond(i <= j and not i = j, i, j)
///   forall i <= r(A) . exists B <= 2 . Sigma(B) = e(A, i, i)
/// Reserved words: lambda cond div rem e r c Sigma forall exists not and
/// or inv. Variable sorts follow the spelling rule of variable_sort().
TermPtr parse_term(const std::string& text);
FormulaPtr parse_formula(const std::string& text);

/// Parse either; formulas are tried first.
std::variant<TermPtr, FormulaPtr> parse_any(const std::string& text);

/// Canonical printer; parse(print(x)) reproduces x structurally.
std::string print_term(const TermPtr& t);
std::string print_formula(const FormulaPtr& f);

} // namespace kmm::la

#endif
