#include "kmm/la/ast.hpp"

#include <algorithm>

namespace kmm::la {

const char* sort_name(Sort s) {
    switch (s) {
        case Sort::Index: return "index";
        case Sort::Ring: return "ring";
        case Sort::Matrix: return "matrix";
    }
    return "?";
}

std::optional<Sort> variable_sort(std::string_view name) {
    if (name.empty()) return std::nullopt;
    char c = name[0];
    if (c >= 'A' && c <= 'Z') return Sort::Matrix;
    if (c < 'a' || c > 'z') return std::nullopt;
    static constexpr std::string_view index_heads = "ijklmnpqxyz";
    if (index_heads.find(c) != std::string_view::npos) return Sort::Index;
    return Sort::Ring;
}

namespace {
std::shared_ptr<Term> mk(Term::Kind k) {
    auto t = std::make_shared<Term>();
    t->kind = k;
    return t;
}
std::shared_ptr<Formula> mkf(Formula::Kind k) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    return f;
}
} // namespace

TermPtr lit(long long v) {
    auto t = mk(Term::Kind::Literal);
    t->value = v;
    return t;
}

TermPtr lit_sorted(long long v, Sort s) {
    auto t = mk(Term::Kind::Literal);
    t->value = v;
    t->literal_suffix = s;
    return t;
}

TermPtr var(std::string name) {
    auto t = mk(Term::Kind::Var);
    t->name = std::move(name);
    return t;
}

namespace {
TermPtr binary(Term::Kind k, TermPtr a, TermPtr b) {
    auto t = mk(k);
    t->args = {std::move(a), std::move(b)};
    return t;
}
TermPtr unary(Term::Kind k, TermPtr a) {
    auto t = mk(k);
    t->args = {std::move(a)};
    return t;
}
} // namespace

TermPtr add(TermPtr a, TermPtr b) { return binary(Term::Kind::Add, std::move(a), std::move(b)); }
TermPtr sub(TermPtr a, TermPtr b) { return binary(Term::Kind::Sub, std::move(a), std::move(b)); }
TermPtr mul(TermPtr a, TermPtr b) { return binary(Term::Kind::Mul, std::move(a), std::move(b)); }
TermPtr div_term(TermPtr a, TermPtr b) {
    return binary(Term::Kind::Div, std::move(a), std::move(b));
}
TermPtr rem_term(TermPtr a, TermPtr b) {
    return binary(Term::Kind::Rem, std::move(a), std::move(b));
}
TermPtr neg(TermPtr a) { return unary(Term::Kind::Neg, std::move(a)); }
TermPtr inv(TermPtr a) { return unary(Term::Kind::Inv, std::move(a)); }
TermPtr rows(TermPtr m) { return unary(Term::Kind::Rows, std::move(m)); }
TermPtr cols(TermPtr m) { return unary(Term::Kind::Cols, std::move(m)); }

TermPtr entry(TermPtr m, TermPtr i, TermPtr j) {
    auto t = mk(Term::Kind::Entry);
    t->args = {std::move(m), std::move(i), std::move(j)};
    return t;
}

TermPtr sum_term(TermPtr m) { return unary(Term::Kind::Sum, std::move(m)); }

TermPtr cond(FormulaPtr guard, TermPtr t1, TermPtr t2) {
    auto t = mk(Term::Kind::Cond);
    t->guard = std::move(guard);
    t->args = {std::move(t1), std::move(t2)};
    return t;
}

TermPtr lam(std::string i, std::string j, TermPtr m, TermPtr n, TermPtr body) {
    auto t = mk(Term::Kind::Lambda);
    t->bind_i = std::move(i);
    t->bind_j = std::move(j);
    t->args = {std::move(m), std::move(n), std::move(body)};
    return t;
}

FormulaPtr le(TermPtr a, TermPtr b) {
    auto f = mkf(Formula::Kind::Le);
    f->lhs = std::move(a);
    f->rhs = std::move(b);
    return f;
}

FormulaPtr eq(TermPtr a, TermPtr b) {
    auto f = mkf(Formula::Kind::Eq);
    f->lhs = std::move(a);
    f->rhs = std::move(b);
    return f;
}

FormulaPtr lnot(FormulaPtr a) {
    auto f = mkf(Formula::Kind::Not);
    f->kids = {std::move(a)};
    return f;
}

namespace {
FormulaPtr connective(Formula::Kind k, FormulaPtr a, FormulaPtr b) {
    auto f = mkf(k);
    f->kids = {std::move(a), std::move(b)};
    return f;
}
FormulaPtr quantifier(Formula::Kind k, std::string v, TermPtr bound, FormulaPtr body) {
    auto f = mkf(k);
    f->var = std::move(v);
    f->lhs = std::move(bound);
    f->kids = {std::move(body)};
    return f;
}
} // namespace

FormulaPtr land(FormulaPtr a, FormulaPtr b) {
    return connective(Formula::Kind::And, std::move(a), std::move(b));
}
FormulaPtr lor(FormulaPtr a, FormulaPtr b) {
    return connective(Formula::Kind::Or, std::move(a), std::move(b));
}
FormulaPtr implies(FormulaPtr a, FormulaPtr b) {
    return connective(Formula::Kind::Implies, std::move(a), std::move(b));
}
FormulaPtr iff(FormulaPtr a, FormulaPtr b) {
    return connective(Formula::Kind::Iff, std::move(a), std::move(b));
}
FormulaPtr forall_index(std::string v, TermPtr bound, FormulaPtr body) {
    return quantifier(Formula::Kind::ForallIndex, std::move(v), std::move(bound), std::move(body));
}
FormulaPtr exists_index(std::string v, TermPtr bound, FormulaPtr body) {
    return quantifier(Formula::Kind::ExistsIndex, std::move(v), std::move(bound), std::move(body));
}
FormulaPtr forall_matrix(std::string v, TermPtr bound, FormulaPtr body) {
    return quantifier(Formula::Kind::ForallMatrix, std::move(v), std::move(bound), std::move(body));
}
FormulaPtr exists_matrix(std::string v, TermPtr bound, FormulaPtr body) {
    return quantifier(Formula::Kind::ExistsMatrix, std::move(v), std::move(bound), std::move(body));
}

FormulaPtr land_all(std::vector<FormulaPtr> fs) {
    FormulaPtr acc = fs.at(0);
    for (std::size_t i = 1; i < fs.size(); ++i) acc = land(acc, fs[i]);
    return acc;
}

bool same_term(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->name != b->name || a->bind_i != b->bind_i ||
        a->bind_j != b->bind_j || a->args.size() != b->args.size())
        return false;
    if (a->kind == Term::Kind::Literal &&
        (a->value != b->value || a->literal_suffix != b->literal_suffix))
        return false;
    if ((a->guard == nullptr) != (b->guard == nullptr)) return false;
    if (a->guard && !same_formula(a->guard, b->guard)) return false;
    for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!same_term(a->args[i], b->args[i])) return false;
    return true;
}

bool same_formula(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->var != b->var || a->kids.size() != b->kids.size()) return false;
    if ((a->lhs == nullptr) != (b->lhs == nullptr)) return false;
    if ((a->rhs == nullptr) != (b->rhs == nullptr)) return false;
    if (a->lhs && !same_term(a->lhs, b->lhs)) return false;
    if (a->rhs && !same_term(a->rhs, b->rhs)) return false;
    for (std::size_t i = 0; i < a->kids.size(); ++i)
        if (!same_formula(a->kids[i], b->kids[i])) return false;
    return true;
}

namespace {
using Subst = std::vector<std::pair<std::string, TermPtr>>;

Subst without(const Subst& map, std::initializer_list<std::string_view> names) {
    Subst out;
    for (const auto& kv : map) {
        bool shadowed = false;
        for (auto n : names)
            if (kv.first == n) shadowed = true;
        if (!shadowed) out.push_back(kv);
    }
    return out;
}
} // namespace

TermPtr subst_term(const TermPtr& t, const Subst& map) {
    if (!t || map.empty()) return t;
    switch (t->kind) {
        case Term::Kind::Literal: return t;
        case Term::Kind::Var:
            for (const auto& [name, rep] : map)
                if (name == t->name) return rep;
            return t;
        case Term::Kind::Lambda: {
            Subst inner = without(map, {t->bind_i, t->bind_j});
            auto c = std::make_shared<Term>(*t);
            c->args = {subst_term(t->args[0], inner), subst_term(t->args[1], inner),
                       subst_term(t->args[2], inner)};
            return c;
        }
        default: {
            auto c = std::make_shared<Term>(*t);
            for (auto& a : c->args) a = subst_term(a, map);
            if (t->guard) c->guard = subst_formula(t->guard, map);
            return c;
        }
    }
}

FormulaPtr subst_formula(const FormulaPtr& f, const Subst& map) {
    if (!f || map.empty()) return f;
    auto c = std::make_shared<Formula>(*f);
    Subst inner = f->var.empty() ? map : without(map, {f->var});
    if (f->lhs) c->lhs = subst_term(f->lhs, map);  // quantifier bounds are outside the scope
    if (f->rhs) c->rhs = subst_term(f->rhs, map);
    for (auto& k : c->kids) k = subst_formula(k, inner);
    return c;
}

namespace {
void collect_formula_impl(const FormulaPtr& f, std::vector<std::string>& bound,
                          std::vector<std::string>& out);

void collect_term(const TermPtr& t, std::vector<std::string>& bound,
                  std::vector<std::string>& out) {
    if (!t) return;
    if (t->kind == Term::Kind::Var) {
        if (std::find(bound.begin(), bound.end(), t->name) == bound.end() &&
            std::find(out.begin(), out.end(), t->name) == out.end())
            out.push_back(t->name);
        return;
    }
    if (t->kind == Term::Kind::Lambda) {
        collect_term(t->args[0], bound, out);
        collect_term(t->args[1], bound, out);
        bound.push_back(t->bind_i);
        bound.push_back(t->bind_j);
        collect_term(t->args[2], bound, out);
        bound.pop_back();
        bound.pop_back();
        return;
    }
    for (const auto& a : t->args) collect_term(a, bound, out);
    if (t->guard) collect_formula_impl(t->guard, bound, out);
}

void collect_formula_impl(const FormulaPtr& f, std::vector<std::string>& bound,
                          std::vector<std::string>& out) {
    if (!f) return;
    if (f->lhs) collect_term(f->lhs, bound, out);
    if (f->rhs) collect_term(f->rhs, bound, out);
    bool quantified = !f->var.empty();
    if (quantified) bound.push_back(f->var);
    for (const auto& k : f->kids) collect_formula_impl(k, bound, out);
    if (quantified) bound.pop_back();
}
} // namespace

void collect_free_vars(const TermPtr& t, std::vector<std::string>& out) {
    std::vector<std::string> bound;
    collect_term(t, bound, out);
}

void collect_free_vars(const FormulaPtr& f, std::vector<std::string>& out) {
    std::vector<std::string> bound;
    collect_formula_impl(f, bound, out);
}

bool mentions_var(const TermPtr& t, std::string_view name) {
    std::vector<std::string> vars;
    collect_free_vars(t, vars);
    return std::find(vars.begin(), vars.end(), name) != vars.end();
}

} // namespace kmm::la
