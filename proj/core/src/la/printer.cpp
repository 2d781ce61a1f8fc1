#include <sstream>

#include "kmm/la/parser.hpp"

namespace kmm::la {

namespace {

int term_prec(const Term& t) {
    switch (t.kind) {
        case Term::Kind::Add:
        case Term::Kind::Sub: return 1;
        case Term::Kind::Mul: return 2;
        case Term::Kind::Neg: return 3;
        default: return 4;
    }
}

void print_term_rec(std::ostream& os, const TermPtr& t, int parent_prec);

void print_child(std::ostream& os, const TermPtr& t, int prec) {
    print_term_rec(os, t, prec);
}

void print_formula_rec(std::ostream& os, const FormulaPtr& f, int parent_prec);

void print_term_rec(std::ostream& os, const TermPtr& t, int parent_prec) {
    const int prec = term_prec(*t);
    const bool parens = prec < parent_prec;
    if (parens) os << "(";
    switch (t->kind) {
        case Term::Kind::Literal:
            os << t->value;
            if (t->literal_suffix)
                os << (*t->literal_suffix == Sort::Index ? "_index" : "_ring");
            break;
        case Term::Kind::Var: os << t->name; break;
        case Term::Kind::Add:
            print_child(os, t->args[0], prec);
            os << " + ";
            print_child(os, t->args[1], prec + 1);
            break;
        case Term::Kind::Sub:
            print_child(os, t->args[0], prec);
            os << " - ";
            print_child(os, t->args[1], prec + 1);
            break;
        case Term::Kind::Mul:
            print_child(os, t->args[0], prec);
            os << " * ";
            print_child(os, t->args[1], prec + 1);
            break;
        case Term::Kind::Neg:
            os << "-";
            print_child(os, t->args[0], prec);
            break;
        case Term::Kind::Div:
        case Term::Kind::Rem:
            os << (t->kind == Term::Kind::Div ? "div" : "rem") << "(";
            print_child(os, t->args[0], 0);
            os << ", ";
            print_child(os, t->args[1], 0);
            os << ")";
            break;
        case Term::Kind::Inv:
            os << "inv(";
            print_child(os, t->args[0], 0);
            os << ")";
            break;
        case Term::Kind::Rows:
        case Term::Kind::Cols:
            os << (t->kind == Term::Kind::Rows ? "r(" : "c(");
            print_child(os, t->args[0], 0);
            os << ")";
            break;
        case Term::Kind::Entry:
            os << "e(";
            print_child(os, t->args[0], 0);
            os << ", ";
            print_child(os, t->args[1], 0);
            os << ", ";
            print_child(os, t->args[2], 0);
            os << ")";
            break;
        case Term::Kind::Sum:
            os << "Sigma(";
            print_child(os, t->args[0], 0);
            os << ")";
            break;
        case Term::Kind::Cond:
            os << "cond(";
            print_formula_rec(os, t->guard, 0);
            os << ", ";
            print_child(os, t->args[0], 0);
            os << ", ";
            print_child(os, t->args[1], 0);
            os << ")";
            break;
        case Term::Kind::Lambda:
            os << "lambda " << t->bind_i << " " << t->bind_j << " <";
            print_child(os, t->args[0], 0);
            os << ", ";
            print_child(os, t->args[1], 0);
            os << ", ";
            print_child(os, t->args[2], 0);
            os << ">";
            break;
    }
    if (parens) os << ")";
}

// Formula precedence: iff 1, implies 2, or 3, and 4, not/quantifier 5, atom 6.
int formula_prec(const Formula& f) {
    switch (f.kind) {
        case Formula::Kind::Iff: return 1;
        case Formula::Kind::Implies: return 2;
        case Formula::Kind::Or: return 3;
        case Formula::Kind::And: return 4;
        case Formula::Kind::Not:
        case Formula::Kind::ForallIndex:
        case Formula::Kind::ExistsIndex:
        case Formula::Kind::ForallMatrix:
        case Formula::Kind::ExistsMatrix: return 5;
        default: return 6;
    }
}

void print_formula_rec(std::ostream& os, const FormulaPtr& f, int parent_prec) {
    const int prec = formula_prec(*f);
    const bool parens = prec < parent_prec;
    if (parens) os << "(";
    switch (f->kind) {
        case Formula::Kind::Le:
            print_term_rec(os, f->lhs, 0);
            os << " <= ";
            print_term_rec(os, f->rhs, 0);
            break;
        case Formula::Kind::Eq:
            print_term_rec(os, f->lhs, 0);
            os << " = ";
            print_term_rec(os, f->rhs, 0);
            break;
        case Formula::Kind::Not:
            os << "not ";
            print_formula_rec(os, f->kids[0], prec);
            break;
        case Formula::Kind::And:
            print_formula_rec(os, f->kids[0], prec);
            os << " and ";
            print_formula_rec(os, f->kids[1], prec + 1);
            break;
        case Formula::Kind::Or:
            print_formula_rec(os, f->kids[0], prec);
            os << " or ";
            print_formula_rec(os, f->kids[1], prec + 1);
            break;
        case Formula::Kind::Implies:
            print_formula_rec(os, f->kids[0], prec + 1);  // right-assoc
            os << " -> ";
            print_formula_rec(os, f->kids[1], prec);
            break;
        case Formula::Kind::Iff:
            print_formula_rec(os, f->kids[0], prec);
            os << " <-> ";
            print_formula_rec(os, f->kids[1], prec + 1);
            break;
        case Formula::Kind::ForallIndex:
        case Formula::Kind::ForallMatrix:
        case Formula::Kind::ExistsIndex:
        case Formula::Kind::ExistsMatrix: {
            bool universal = f->kind == Formula::Kind::ForallIndex ||
                             f->kind == Formula::Kind::ForallMatrix;
            os << (universal ? "forall " : "exists ") << f->var << " <= ";
            print_term_rec(os, f->lhs, 0);
            os << " . ";
            print_formula_rec(os, f->kids[0], prec);
            break;
        }
    }
    if (parens) os << ")";
}

} // namespace

std::string print_term(const TermPtr& t) {
    std::ostringstream os;
    print_term_rec(os, t, 0);
    return os.str();
}

std::string print_formula(const FormulaPtr& f) {
    std::ostringstream os;
    print_formula_rec(os, f, 0);
    return os.str();
}

} // namespace kmm::la
