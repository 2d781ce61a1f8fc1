#include <string>

#include "kmm/la/eval.hpp"

namespace kmm::la {

IntMatrix IntMatrix::from_bool(const BoolMatrix& b) {
    IntMatrix m(b.rows(), b.cols());
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m.set(r, c, b.at(r, c));
    return m;
}

Sort value_sort(const Value& v) {
    if (std::holds_alternative<IndexValue>(v)) return Sort::Index;
    if (std::holds_alternative<RingValue>(v)) return Sort::Ring;
    return Sort::Matrix;
}

Environment& Environment::set_index(const std::string& name, IndexValue v) {
    index_[name] = v;
    return *this;
}
Environment& Environment::set_ring(const std::string& name, RingValue v) {
    ring_[name] = v;
    return *this;
}
Environment& Environment::set_matrix(const std::string& name, IntMatrix v) {
    matrix_[name] = std::move(v);
    return *this;
}

IndexValue Environment::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw invalid_input("unbound index variable '" + name + "'");
    return it->second;
}
RingValue Environment::ring_of(const std::string& name) const {
    auto it = ring_.find(name);
    if (it == ring_.end()) throw invalid_input("unbound ring variable '" + name + "'");
    return it->second;
}
const IntMatrix& Environment::matrix_of(const std::string& name) const {
    auto it = matrix_.find(name);
    if (it == matrix_.end()) throw invalid_input("unbound matrix variable '" + name + "'");
    return it->second;
}

namespace {

class Evaluator {
public:
    Evaluator(Environment env, const EvalBudget& budget) : env_(std::move(env)), budget_(budget) {}

    Value term(const TermPtr& t) {
        switch (t->kind) {
            case Term::Kind::Literal:
                if (t->sort == Sort::Ring) return RingValue{t->value};
                return IndexValue(t->value);
            case Term::Kind::Var:
                switch (t->sort) {
                    case Sort::Index: return env_.index_of(t->name);
                    case Sort::Ring: return env_.ring_of(t->name);
                    case Sort::Matrix: return env_.matrix_of(t->name);
                }
                break;
            case Term::Kind::Add:
                if (t->sort == Sort::Index) return idx(t->args[0]) + idx(t->args[1]);
                return ring(t->args[0]) + ring(t->args[1]);
            case Term::Kind::Sub:
                if (t->sort == Sort::Index) {
                    IndexValue a = idx(t->args[0]), b = idx(t->args[1]);
                    return a < b ? IndexValue{0} : a - b;  // cut-off subtraction
                }
                return ring(t->args[0]) - ring(t->args[1]);
            case Term::Kind::Mul:
                if (t->sort == Sort::Index) return idx(t->args[0]) * idx(t->args[1]);
                return ring(t->args[0]) * ring(t->args[1]);
            case Term::Kind::Div: {
                IndexValue a = idx(t->args[0]), b = idx(t->args[1]);
                return b == 0 ? IndexValue{0} : a / b;  // i div 0 = 0
            }
            case Term::Kind::Rem: {
                IndexValue a = idx(t->args[0]), b = idx(t->args[1]);
                return b == 0 ? a : a % b;  // i rem 0 = i
            }
            case Term::Kind::Neg: return -ring(t->args[0]);
            case Term::Kind::Inv: {
                RingValue a = ring(t->args[0]);
                return (a == 1 || a == -1) ? a : RingValue{0};  // total over Z
            }
            case Term::Kind::Rows: return IndexValue{mat(t->args[0]).rows};
            case Term::Kind::Cols: return IndexValue{mat(t->args[0]).cols};
            case Term::Kind::Entry: {
                IntMatrix m = mat(t->args[0]);
                IndexValue i = idx(t->args[1]), j = idx(t->args[2]);
                if (i == 0 || j == 0 || i > m.rows || j > m.cols) return RingValue{0};
                return m.at(i - 1, j - 1);
            }
            case Term::Kind::Sum: {
                IntMatrix m = mat(t->args[0]);
                RingValue s = 0;
                for (long long v : m.a) s += v;
                return s;
            }
            case Term::Kind::Cond: {
                bool g = formula(t->guard);
                return term(t->args[g ? 0 : 1]);
            }
            case Term::Kind::Lambda: {
                IndexValue m = idx(t->args[0]), n = idx(t->args[1]);
                if (m * n > budget_.max_lambda_cells)
                    throw budget_exceeded("lambda term materializes too many cells");
                IntMatrix out(m, n);
                Binder bi(*this, t->bind_i), bj(*this, t->bind_j);
                for (IndexValue r = 1; r <= m; ++r) {
                    bi.set(r);
                    for (IndexValue c = 1; c <= n; ++c) {
                        bj.set(c);
                        out.set(r - 1, c - 1, ring(t->args[2]));
                    }
                }
                return out;
            }
        }
        throw std::logic_error("eval_term: unhandled node");
    }

    bool formula(const FormulaPtr& f) {
        switch (f->kind) {
            case Formula::Kind::Le: return idx(f->lhs) <= idx(f->rhs);
            case Formula::Kind::Eq:
                switch (f->eq_sort) {
                    case Sort::Index: return idx(f->lhs) == idx(f->rhs);
                    case Sort::Ring: return ring(f->lhs) == ring(f->rhs);
                    case Sort::Matrix: return mat(f->lhs) == mat(f->rhs);
                }
                break;
            case Formula::Kind::Not: return !formula(f->kids[0]);
            case Formula::Kind::And: return formula(f->kids[0]) && formula(f->kids[1]);
            case Formula::Kind::Or: return formula(f->kids[0]) || formula(f->kids[1]);
            case Formula::Kind::Implies: return !formula(f->kids[0]) || formula(f->kids[1]);
            case Formula::Kind::Iff: return formula(f->kids[0]) == formula(f->kids[1]);
            case Formula::Kind::ForallIndex:
            case Formula::Kind::ExistsIndex: {
                const bool universal = f->kind == Formula::Kind::ForallIndex;
                IndexValue bound = idx(f->lhs);
                Binder b(*this, f->var);
                for (IndexValue v = 1; v <= bound; ++v) {  // 1..bound; empty when bound = 0
                    b.set(v);
                    bool r = formula(f->kids[0]);
                    if (universal && !r) return false;
                    if (!universal && r) return true;
                }
                return universal;
            }
            case Formula::Kind::ForallMatrix:
            case Formula::Kind::ExistsMatrix: {
                const bool universal = f->kind == Formula::Kind::ForallMatrix;
                IndexValue bound = idx(f->lhs);
                if (bound > budget_.max_matrix_quantifier_dim)
                    throw budget_exceeded("matrix quantifier bound " + std::to_string(bound) +
                                          " exceeds the evaluation budget");
                MatrixBinder b(*this, f->var);
                for (IndexValue r = 0; r <= bound; ++r) {
                    for (IndexValue c = 0; c <= bound; ++c) {
                        const IndexValue cells = r * c;
                        if (cells >= 20)
                            throw budget_exceeded("matrix quantifier enumerates 2^" +
                                                  std::to_string(cells) + " candidates");
                        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
                            IntMatrix m(r, c);
                            for (IndexValue k = 0; k < cells; ++k)
                                m.a[k] = (bits >> k) & 1;  // row-major fill
                            b.set(std::move(m));
                            bool res = formula(f->kids[0]);
                            if (universal && !res) return false;
                            if (!universal && res) return true;
                        }
                    }
                }
                return universal;
            }
        }
        throw std::logic_error("eval_formula: unhandled node");
    }

private:
    Environment env_;
    EvalBudget budget_;

    IndexValue idx(const TermPtr& t) { return std::get<IndexValue>(term(t)); }
    RingValue ring(const TermPtr& t) { return std::get<RingValue>(term(t)); }
    IntMatrix mat(const TermPtr& t) { return std::get<IntMatrix>(term(t)); }

    /// Scoped index binding with restore-on-destruction.
    class Binder {
    public:
        Binder(Evaluator& ev, std::string name) : ev_(ev), name_(std::move(name)) {
            auto it = ev_.env_.indices().find(name_);
            if (it != ev_.env_.indices().end()) saved_ = it->second;
        }
        void set(IndexValue v) { ev_.env_.set_index(name_, v); }
        ~Binder() {
            if (saved_)
                ev_.env_.set_index(name_, *saved_);
            // otherwise leave the binding; lookups of a stale binder only
            // happen for ill-scoped ASTs that typecheck already rejects
        }

    private:
        Evaluator& ev_;
        std::string name_;
        std::optional<IndexValue> saved_;
    };

    class MatrixBinder {
    public:
        MatrixBinder(Evaluator& ev, std::string name) : ev_(ev), name_(std::move(name)) {
            auto it = ev_.env_.matrices().find(name_);
            if (it != ev_.env_.matrices().end()) saved_ = it->second;
        }
        void set(IntMatrix m) { ev_.env_.set_matrix(name_, std::move(m)); }
        ~MatrixBinder() {
            if (saved_) ev_.env_.set_matrix(name_, std::move(*saved_));
        }

    private:
        Evaluator& ev_;
        std::string name_;
        std::optional<IntMatrix> saved_;
    };
};

} // namespace

namespace {
void require_bound(const std::vector<std::string>& free, const Environment& env) {
    for (const auto& name : free) {
        switch (*variable_sort(name)) {
            case Sort::Index: env.index_of(name); break;
            case Sort::Ring: env.ring_of(name); break;
            case Sort::Matrix: env.matrix_of(name); break;
        }
    }
}
} // namespace

Value eval_term(const TermPtr& t, const Environment& env, const EvalBudget& budget) {
    typecheck(t);
    std::vector<std::string> free;
    collect_free_vars(t, free);
    require_bound(free, env);
    return Evaluator(env, budget).term(t);
}

bool eval_formula(const FormulaPtr& f, const Environment& env, const EvalBudget& budget) {
    typecheck(f);
    std::vector<std::string> free;
    collect_free_vars(f, free);
    require_bound(free, env);
    return Evaluator(env, budget).formula(f);
}

} // namespace kmm::la
