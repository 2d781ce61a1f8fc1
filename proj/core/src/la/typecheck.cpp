#include <string>

#include "kmm/la/eval.hpp"

namespace kmm::la {

namespace {

[[noreturn]] void sort_fail(const std::string& msg, SourcePos pos) {
    std::string where;
    if (pos.line) where = " at " + std::to_string(pos.line) + ":" + std::to_string(pos.column);
    throw invalid_input(msg + where);
}

/// Non-committal sort inference: nullopt when only literals constrain
/// the node.
std::optional<Sort> peek_sort(const TermPtr& t) {
    switch (t->kind) {
        case Term::Kind::Literal:
            if (t->literal_suffix) return *t->literal_suffix;
            if (t->value < 0) return Sort::Ring;
            return std::nullopt;
        case Term::Kind::Var: return variable_sort(t->name);
        case Term::Kind::Add:
        case Term::Kind::Sub:
        case Term::Kind::Mul: {
            auto a = peek_sort(t->args[0]);
            return a ? a : peek_sort(t->args[1]);
        }
        case Term::Kind::Div:
        case Term::Kind::Rem:
        case Term::Kind::Rows:
        case Term::Kind::Cols: return Sort::Index;
        case Term::Kind::Neg:
        case Term::Kind::Inv:
        case Term::Kind::Entry:
        case Term::Kind::Sum: return Sort::Ring;
        case Term::Kind::Cond: {
            auto a = peek_sort(t->args[0]);
            return a ? a : peek_sort(t->args[1]);
        }
        case Term::Kind::Lambda: return Sort::Matrix;
    }
    return std::nullopt;
}

void require(const TermPtr& t, Sort actual, std::optional<Sort> expected) {
    if (expected && *expected != actual)
        sort_fail(std::string("expected a ") + sort_name(*expected) + " term, found " +
                      sort_name(actual),
                  t->pos);
}

/// Guards of cond must be index formulas: Le / index-Eq atoms, no
/// matrix quantifiers, no ring or matrix equalities.
void check_guard(const FormulaPtr& f) {
    switch (f->kind) {
        case Formula::Kind::Le:
        case Formula::Kind::Eq: {
            Sort l = typecheck(f->lhs, Sort::Index);
            Sort r = typecheck(f->rhs, Sort::Index);
            (void)l;
            (void)r;
            f->eq_sort = Sort::Index;
            return;
        }
        case Formula::Kind::ForallMatrix:
        case Formula::Kind::ExistsMatrix:
            sort_fail("cond guards cannot quantify over matrices", f->pos);
        case Formula::Kind::ForallIndex:
        case Formula::Kind::ExistsIndex:
            typecheck(f->lhs, Sort::Index);
            check_guard(f->kids[0]);
            return;
        default:
            for (const auto& k : f->kids) check_guard(k);
            return;
    }
}

} // namespace

Sort typecheck(const TermPtr& t, std::optional<Sort> expected) {
    Sort result;
    switch (t->kind) {
        case Term::Kind::Literal: {
            if (t->literal_suffix)
                result = *t->literal_suffix;
            else if (t->value < 0)
                result = Sort::Ring;
            else
                result = expected.value_or(Sort::Index);
            if (result == Sort::Matrix) sort_fail("a numeral cannot be a matrix", t->pos);
            if (result == Sort::Index && t->value < 0)
                sort_fail("index numerals are nonnegative", t->pos);
            break;
        }
        case Term::Kind::Var: {
            auto s = variable_sort(t->name);
            if (!s) sort_fail("cannot assign a sort to '" + t->name + "'", t->pos);
            result = *s;
            break;
        }
        case Term::Kind::Add:
        case Term::Kind::Sub:
        case Term::Kind::Mul: {
            std::optional<Sort> joint = expected;
            if (!joint) joint = peek_sort(t->args[0]);
            if (!joint) joint = peek_sort(t->args[1]);
            Sort s = joint.value_or(Sort::Index);
            if (s == Sort::Matrix)
                sort_fail("arithmetic on matrices is not part of the language", t->pos);
            typecheck(t->args[0], s);
            typecheck(t->args[1], s);
            result = s;
            break;
        }
        case Term::Kind::Div:
        case Term::Kind::Rem:
            typecheck(t->args[0], Sort::Index);
            typecheck(t->args[1], Sort::Index);
            result = Sort::Index;
            break;
        case Term::Kind::Neg:
        case Term::Kind::Inv:
            typecheck(t->args[0], Sort::Ring);
            result = Sort::Ring;
            break;
        case Term::Kind::Rows:
        case Term::Kind::Cols:
            typecheck(t->args[0], Sort::Matrix);
            result = Sort::Index;
            break;
        case Term::Kind::Entry:
            typecheck(t->args[0], Sort::Matrix);
            typecheck(t->args[1], Sort::Index);
            typecheck(t->args[2], Sort::Index);
            result = Sort::Ring;
            break;
        case Term::Kind::Sum:
            typecheck(t->args[0], Sort::Matrix);
            result = Sort::Ring;
            break;
        case Term::Kind::Cond: {
            check_guard(t->guard);
            std::optional<Sort> joint = expected;
            if (!joint) joint = peek_sort(t->args[0]);
            if (!joint) joint = peek_sort(t->args[1]);
            Sort s = joint.value_or(Sort::Index);
            if (s == Sort::Matrix) sort_fail("cond branches must be index or ring terms", t->pos);
            typecheck(t->args[0], s);
            typecheck(t->args[1], s);
            result = s;
            break;
        }
        case Term::Kind::Lambda: {
            if (variable_sort(t->bind_i) != Sort::Index ||
                variable_sort(t->bind_j) != Sort::Index)
                sort_fail("lambda binders must be index variables", t->pos);
            if (mentions_var(t->args[0], t->bind_i) || mentions_var(t->args[0], t->bind_j) ||
                mentions_var(t->args[1], t->bind_i) || mentions_var(t->args[1], t->bind_j))
                sort_fail("lambda bounds must not mention the bound variables", t->pos);
            typecheck(t->args[0], Sort::Index);
            typecheck(t->args[1], Sort::Index);
            typecheck(t->args[2], Sort::Ring);
            result = Sort::Matrix;
            break;
        }
        default: sort_fail("unknown term", t->pos);
    }
    require(t, result, expected);
    t->sort = result;
    t->sort_known = true;
    return result;
}

void typecheck(const FormulaPtr& f) {
    switch (f->kind) {
        case Formula::Kind::Le:
            typecheck(f->lhs, Sort::Index);
            typecheck(f->rhs, Sort::Index);
            return;
        case Formula::Kind::Eq: {
            std::optional<Sort> joint = peek_sort(f->lhs);
            if (!joint) joint = peek_sort(f->rhs);
            Sort s = joint.value_or(Sort::Index);
            typecheck(f->lhs, s);
            typecheck(f->rhs, s);
            f->eq_sort = s;
            return;
        }
        case Formula::Kind::Not:
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
        case Formula::Kind::Iff:
            for (const auto& k : f->kids) typecheck(k);
            return;
        case Formula::Kind::ForallIndex:
        case Formula::Kind::ExistsIndex:
            if (variable_sort(f->var) != Sort::Index)
                sort_fail("index quantifier over non-index variable '" + f->var + "'", f->pos);
            typecheck(f->lhs, Sort::Index);
            typecheck(f->kids[0]);
            return;
        case Formula::Kind::ForallMatrix:
        case Formula::Kind::ExistsMatrix:
            if (variable_sort(f->var) != Sort::Matrix)
                sort_fail("matrix quantifier over non-matrix variable '" + f->var + "'", f->pos);
            typecheck(f->lhs, Sort::Index);
            typecheck(f->kids[0]);
            return;
    }
}

} // namespace kmm::la
