#ifndef KMM_LA_EVAL_HPP
#define KMM_LA_EVAL_HPP

#include <map>
#include <variant>

#include "kmm/errors.hpp"
#include "kmm/la/ast.hpp"
#include "kmm/matrix.hpp"

namespace kmm::la {

/// Dense integer matrix (the ring is Z); 0xk and kx0 shapes are legal.
struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<long long> a;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    long long at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
    void set(std::size_t r, std::size_t c, long long v) { a[r * cols + c] = v; }

    static IntMatrix from_bool(const BoolMatrix& b);

    friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

using IndexValue = unsigned long long;
using RingValue = long long;
using Value = std::variant<IndexValue, RingValue, IntMatrix>;

Sort value_sort(const Value& v);

/// Valuation of free variables, keyed by name within each sort.
class Environment {
public:
    Environment& set_index(const std::string& name, IndexValue v);
    Environment& set_ring(const std::string& name, RingValue v);
    Environment& set_matrix(const std::string& name, IntMatrix v);

    IndexValue index_of(const std::string& name) const;
    RingValue ring_of(const std::string& name) const;
    const IntMatrix& matrix_of(const std::string& name) const;

    const std::map<std::string, IndexValue>& indices() const { return index_; }
    const std::map<std::string, RingValue>& rings() const { return ring_; }
    const std::map<std::string, IntMatrix>& matrices() const { return matrix_; }

private:
    std::map<std::string, IndexValue> index_;
    std::map<std::string, RingValue> ring_;
    std::map<std::string, IntMatrix> matrix_;
};

struct EvalBudget {
    /// Largest admissible value of a matrix-quantifier bound; the
    /// enumeration covers every 0-1 matrix of every shape up to it.
    IndexValue max_matrix_quantifier_dim = 3;
    /// Cap on cells materialized by a single lambda term.
    IndexValue max_lambda_cells = 1u << 20;
};

/// Evaluate a typechecked term / formula. Both entry points typecheck
/// first (idempotent), so callers may hand freshly parsed ASTs in.
/// Index quantifiers range over 1..bound (empty when the bound is 0);
/// matrix quantifiers enumerate all 0-1 matrices of shape (r, c),
/// 0 <= r, c <= bound, shapes in lexicographic order and entries in
/// row-major binary counting order.
Value eval_term(const TermPtr& t, const Environment& env, const EvalBudget& budget = {});
bool eval_formula(const FormulaPtr& f, const Environment& env, const EvalBudget& budget = {});

/// Sort-annotate an AST, rejecting ill-sorted input. The optional
/// expectation lets literal sorts flow from context; unconstrained
/// literals default to index.
Sort typecheck(const TermPtr& t, std::optional<Sort> expected = {});
void typecheck(const FormulaPtr& f);

} // namespace kmm::la

#endif
