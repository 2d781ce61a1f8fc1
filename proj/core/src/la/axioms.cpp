#include <array>
#include <functional>
#include <random>
#include <sstream>

#include "kmm/la/axioms.hpp"
#include "kmm/la/parser.hpp"

namespace kmm::la {

namespace {

/// Deterministic generator for terms, formulas and environments. The
/// engine is seeded per axiom so the suite shards cleanly.
class Gen {
public:
    explicit Gen(unsigned long long seed) : rng_(seed) {}

    unsigned long long raw() { return rng_(); }
    IndexValue index_value() { return raw() % 7; }
    RingValue ring_value() { return static_cast<RingValue>(raw() % 11) - 5; }
    bool coin() { return raw() & 1; }
    std::size_t pick(std::size_t n) { return raw() % n; }

    IntMatrix matrix_value(std::size_t max_dim = 4) {
        IntMatrix m(pick(max_dim + 1), pick(max_dim + 1));
        for (auto& v : m.a) v = static_cast<long long>(raw() % 7) - 3;
        return m;
    }

    IntMatrix bool_matrix_value(std::size_t max_dim = 4) {
        IntMatrix m(pick(max_dim + 1), pick(max_dim + 1));
        for (auto& v : m.a) v = static_cast<long long>(raw() % 2);
        return m;
    }

    /// A standard environment binding the variable pools.
    Environment environment() {
        Environment env;
        for (const char* v : {"i", "j", "k", "l", "m", "n"}) env.set_index(v, index_value());
        for (const char* v : {"a", "b", "d"}) env.set_ring(v, ring_value());
        env.set_matrix("A", matrix_value());
        env.set_matrix("B", matrix_value());
        return env;
    }

    TermPtr index_term(int depth) {
        if (depth <= 0 || pick(3) == 0) {
            if (coin()) return lit(static_cast<long long>(pick(4)));
            const char* pool[] = {"i", "j", "k"};
            return var(pool[pick(3)]);
        }
        switch (pick(6)) {
            case 0: return add(index_term(depth - 1), index_term(depth - 1));
            case 1: return sub(index_term(depth - 1), index_term(depth - 1));
            case 2: return mul(index_term(depth - 1), index_term(depth - 1));
            case 3: return div_term(index_term(depth - 1), index_term(depth - 1));
            case 4: return rem_term(index_term(depth - 1), index_term(depth - 1));
            default: return coin() ? rows(matrix_term(depth - 1)) : cols(matrix_term(depth - 1));
        }
    }

    TermPtr ring_term(int depth) {
        if (depth <= 0 || pick(3) == 0) {
            if (coin()) return lit_sorted(static_cast<long long>(pick(7)) - 3, Sort::Ring);
            const char* pool[] = {"a", "b", "d"};
            return var(pool[pick(3)]);
        }
        switch (pick(7)) {
            case 0: return add(ring_term(depth - 1), ring_term(depth - 1));
            case 1: return sub(ring_term(depth - 1), ring_term(depth - 1));
            case 2: return mul(ring_term(depth - 1), ring_term(depth - 1));
            case 3: return neg(ring_term(depth - 1));
            case 4: return inv(ring_term(depth - 1));
            case 5: return entry(matrix_term(depth - 1), index_term(depth - 1),
                                 index_term(depth - 1));
            default: return sum_term(matrix_term(depth - 1));
        }
    }

    TermPtr matrix_term(int depth) {
        if (depth <= 0 || coin()) return var(coin() ? "A" : "B");
        // lambda with literal bounds keeps materialization small
        TermPtr m = lit(static_cast<long long>(pick(4)));
        TermPtr n = lit(static_cast<long long>(pick(4)));
        std::string bi = "p", bj = "q";
        auto body = entry(var(coin() ? "A" : "B"), var(bi), var(bj));
        return lam(bi, bj, m, n, body);
    }

    FormulaPtr index_guard(int depth) {
        if (depth <= 0 || pick(3) == 0) {
            auto atom = coin() ? le(index_term(1), index_term(1))
                               : eq(index_term(1), index_term(1));
            return atom;
        }
        switch (pick(4)) {
            case 0: return lnot(index_guard(depth - 1));
            case 1: return land(index_guard(depth - 1), index_guard(depth - 1));
            case 2: return lor(index_guard(depth - 1), index_guard(depth - 1));
            default: return implies(index_guard(depth - 1), index_guard(depth - 1));
        }
    }

    TermPtr term_of(Sort s, int depth) {
        switch (s) {
            case Sort::Index: return index_term(depth);
            case Sort::Ring: return ring_term(depth);
            case Sort::Matrix: return matrix_term(depth);
        }
        return lit(0);
    }

private:
    std::mt19937_64 rng_;
};

using Builder = std::function<FormulaPtr(Gen&)>;

TermPtr transpose_of(TermPtr a) {
    return lam("p", "q", cols(a), rows(a), entry(a, var("q"), var("p")));
}

// The R / S / M block decomposition used by the recursive Sigma axioms.
TermPtr block_r(TermPtr a) {
    return lam("p", "q", lit(1), sub(cols(a), lit(1)), entry(a, lit(1), add(var("q"), lit(1))));
}
TermPtr block_s(TermPtr a) {
    return lam("p", "q", sub(rows(a), lit(1)), lit(1), entry(a, add(var("p"), lit(1)), lit(1)));
}
TermPtr block_m(TermPtr a) {
    return lam("p", "q", sub(rows(a), lit(1)), sub(cols(a), lit(1)),
               entry(a, add(var("p"), lit(1)), add(var("q"), lit(1))));
}

/// x = y for a randomly chosen sort.
FormulaPtr random_eq(Gen& g, Sort s, bool force_equal) {
    TermPtr x = g.term_of(s, 2);
    TermPtr y = force_equal ? x : g.term_of(s, 2);
    return eq(x, y);
}

std::vector<std::pair<std::string, Builder>> axiom_builders() {
    std::vector<std::pair<std::string, Builder>> out;
    auto addax = [&](std::string name, Builder b) { out.emplace_back(std::move(name), std::move(b)); };

    // Equality axioms.
    addax("A1", [](Gen& g) {
        Sort s = std::array{Sort::Index, Sort::Ring, Sort::Matrix}[g.pick(3)];
        TermPtr x = g.term_of(s, 2);
        return eq(x, x);
    });
    addax("A2", [](Gen& g) {
        Sort s = std::array{Sort::Index, Sort::Ring, Sort::Matrix}[g.pick(3)];
        auto f = random_eq(g, s, g.coin());
        return implies(f, eq(f->rhs, f->lhs));
    });
    addax("A3", [](Gen& g) {
        Sort s = std::array{Sort::Index, Sort::Ring, Sort::Matrix}[g.pick(3)];
        TermPtr x = g.term_of(s, 2);
        TermPtr y = g.coin() ? x : g.term_of(s, 2);
        TermPtr z = g.coin() ? y : g.term_of(s, 2);
        return implies(land(eq(x, y), eq(y, z)), eq(x, z));
    });
    addax("A4", [](Gen& g) {
        // congruence for a randomly chosen function symbol
        auto arg_i = [&](bool same, TermPtr& x, TermPtr& y) {
            x = g.index_term(2);
            y = same ? x : g.index_term(2);
        };
        auto arg_r = [&](bool same, TermPtr& x, TermPtr& y) {
            x = g.ring_term(2);
            y = same ? x : g.ring_term(2);
        };
        auto arg_m = [&](bool same, TermPtr& x, TermPtr& y) {
            x = g.matrix_term(1);
            y = same ? x : g.matrix_term(1);
        };
        bool same = g.coin();
        TermPtr x1, y1, x2, y2, x3, y3;
        switch (g.pick(10)) {
            case 0:
                arg_i(same, x1, y1);
                arg_i(g.coin(), x2, y2);
                return implies(land(eq(x1, y1), eq(x2, y2)), eq(add(x1, x2), add(y1, y2)));
            case 1:
                arg_i(same, x1, y1);
                arg_i(g.coin(), x2, y2);
                return implies(land(eq(x1, y1), eq(x2, y2)), eq(mul(x1, x2), mul(y1, y2)));
            case 2:
                arg_i(same, x1, y1);
                arg_i(g.coin(), x2, y2);
                return implies(land(eq(x1, y1), eq(x2, y2)),
                               eq(div_term(x1, x2), div_term(y1, y2)));
            case 3:
                arg_r(same, x1, y1);
                arg_r(g.coin(), x2, y2);
                return implies(land(eq(x1, y1), eq(x2, y2)), eq(add(x1, x2), add(y1, y2)));
            case 4:
                arg_r(same, x1, y1);
                arg_r(g.coin(), x2, y2);
                return implies(land(eq(x1, y1), eq(x2, y2)), eq(mul(x1, x2), mul(y1, y2)));
            case 5:
                arg_r(same, x1, y1);
                return implies(eq(x1, y1), eq(neg(x1), neg(y1)));
            case 6:
                arg_r(same, x1, y1);
                return implies(eq(x1, y1), eq(inv(x1), inv(y1)));
            case 7:
                arg_m(same, x1, y1);
                return implies(eq(x1, y1), eq(rows(x1), rows(y1)));
            case 8:
                arg_m(same, x1, y1);
                return implies(eq(x1, y1), eq(sum_term(x1), sum_term(y1)));
            default:
                arg_m(same, x1, y1);
                arg_i(g.coin(), x2, y2);
                arg_i(g.coin(), x3, y3);
                return implies(land(land(eq(x1, y1), eq(x2, y2)), eq(x3, y3)),
                               eq(entry(x1, x2, x3), entry(y1, y2, y3)));
        }
    });
    addax("A5", [](Gen& g) {
        TermPtr i1 = g.index_term(2), i2 = g.index_term(2);
        TermPtr j1 = g.coin() ? i1 : g.index_term(2);
        TermPtr j2 = g.coin() ? i2 : g.index_term(2);
        return implies(land(land(eq(i1, j1), eq(i2, j2)), le(i1, i2)), le(j1, j2));
    });

    // Index axioms.
    addax("A6", [](Gen& g) { return lnot(eq(add(g.index_term(2), lit(1)), lit(0))); });
    addax("A7", [](Gen& g) {
        TermPtr i = g.index_term(2), j = g.index_term(2);
        return eq(mul(i, add(j, lit(1))), add(mul(i, j), i));
    });
    addax("A8", [](Gen& g) {
        TermPtr i = g.index_term(2), j = g.coin() ? g.index_term(2) : g.index_term(0);
        return implies(eq(add(i, lit(1)), add(j, lit(1))), eq(i, j));
    });
    addax("A9", [](Gen& g) {
        TermPtr i = g.index_term(2);
        return le(i, add(i, g.index_term(2)));
    });
    addax("A10", [](Gen& g) {
        TermPtr i = g.index_term(2);
        return eq(add(i, lit(0)), i);
    });
    addax("A11", [](Gen& g) {
        TermPtr i = g.index_term(2), j = g.index_term(2);
        return lor(le(i, j), le(j, i));  // totality of <= (stated with a disjunction)
    });
    addax("A12", [](Gen& g) {
        TermPtr i = g.index_term(2), j = g.index_term(2);
        return eq(add(i, add(j, lit(1))), add(add(i, j), lit(1)));
    });
    addax("A13", [](Gen& g) {
        TermPtr i = g.index_term(2), j = g.coin() ? g.index_term(2) : g.index_term(0);
        return implies(land(le(i, j), le(j, i)), eq(i, j));
    });
    addax("A14", [](Gen& g) { return eq(mul(g.index_term(2), lit(0)), lit(0)); });
    addax("A15", [](Gen& g) {
        TermPtr i = g.index_term(1), j = g.index_term(1), k = g.index_term(1);
        if (g.coin()) j = add(i, k);  // make the premise non-vacuous often
        return implies(land(le(i, j), eq(add(i, k), j)), eq(sub(j, i), k));
    });
    addax("A16", [](Gen& g) {
        TermPtr i = g.index_term(2), j = g.index_term(2);
        return implies(lnot(le(i, j)), eq(sub(j, i), lit(0)));
    });
    addax("A17", [](Gen& g) {
        FormulaPtr a = g.index_guard(2);
        TermPtr i = g.index_term(2), j = g.index_term(2);
        return land(implies(a, eq(cond(a, i, j), i)),
                    implies(lnot(a), eq(cond(a, i, j), j)));
    });

    // Ring axioms.
    addax("A18", [](Gen& g) {
        TermPtr a = g.ring_term(2);
        return land(lnot(eq(lit_sorted(0, Sort::Ring), lit_sorted(1, Sort::Ring))),
                    eq(add(a, lit_sorted(0, Sort::Ring)), a));
    });
    addax("A19", [](Gen& g) {
        TermPtr a = g.ring_term(2);
        return eq(add(a, neg(a)), lit_sorted(0, Sort::Ring));
    });
    addax("A20", [](Gen& g) {
        TermPtr a = g.ring_term(2);
        return eq(mul(lit_sorted(1, Sort::Ring), a), a);
    });
    addax("A21", [](Gen& g) {
        TermPtr a = g.ring_term(2), b = g.ring_term(2);
        return eq(add(a, b), add(b, a));
    });
    addax("A22", [](Gen& g) {
        TermPtr a = g.ring_term(2), b = g.ring_term(2);
        return eq(mul(a, b), mul(b, a));
    });
    addax("A23", [](Gen& g) {
        TermPtr a = g.ring_term(2), b = g.ring_term(2), d = g.ring_term(2);
        return eq(add(a, add(b, d)), add(add(a, b), d));
    });
    addax("A24", [](Gen& g) {
        TermPtr a = g.ring_term(2), b = g.ring_term(2), d = g.ring_term(2);
        return eq(mul(a, mul(b, d)), mul(mul(a, b), d));
    });
    addax("A25", [](Gen& g) {
        TermPtr a = g.ring_term(2), b = g.ring_term(2), d = g.ring_term(2);
        return eq(mul(a, add(b, d)), add(mul(a, b), mul(a, d)));
    });
    addax("A26", [](Gen& g) {
        FormulaPtr alpha = g.index_guard(2);
        TermPtr a = g.ring_term(2), b = g.ring_term(2);
        return land(implies(alpha, eq(cond(alpha, a, b), a)),
                    implies(lnot(alpha), eq(cond(alpha, a, b), b)));
    });

    // Matrix axioms.
    addax("A27", [](Gen& g) {
        TermPtr a = g.matrix_term(1);
        TermPtr i = g.index_term(1), j = g.index_term(1);
        auto outside = lor(lor(eq(i, lit(0)), lnot(le(i, rows(a)))),
                           lor(eq(j, lit(0)), lnot(le(j, cols(a)))));
        return implies(outside, eq(entry(a, i, j), lit_sorted(0, Sort::Ring)));
    });
    addax("A28", [](Gen& g) {
        TermPtr m = lit(static_cast<long long>(g.pick(4)));
        TermPtr n = lit(static_cast<long long>(g.pick(4)));
        TermPtr body = g.coin() ? entry(var("A"), var("p"), var("q"))
                                : add(entry(var("A"), var("p"), var("q")),
                                      lit_sorted(static_cast<long long>(g.pick(3)), Sort::Ring));
        TermPtr lambda = lam("p", "q", m, n, body);
        TermPtr k = var("k"), l = var("l");
        auto in_range = land(land(le(lit(1), k), le(k, m)), land(le(lit(1), l), le(l, n)));
        TermPtr body_kl =
            subst_term(body, {{"p", k}, {"q", l}});
        return land(land(eq(rows(lambda), m), eq(cols(lambda), n)),
                    implies(in_range, eq(entry(lambda, k, l), body_kl)));
    });
    addax("A29", [](Gen& g) {
        TermPtr a = g.matrix_term(1);
        return implies(land(eq(rows(a), lit(1)), eq(cols(a), lit(1))),
                       eq(sum_term(a), entry(a, lit(1), lit(1))));
    });
    addax("A30", [](Gen& g) {
        TermPtr a = g.matrix_term(1);
        TermPtr head = lam("p", "q", lit(1), sub(cols(a), lit(1)), entry(a, var("p"), var("q")));
        return implies(land(eq(rows(a), lit(1)), le(add(lit(1), lit(1)), cols(a))),
                       eq(sum_term(a), add(sum_term(head), entry(a, lit(1), cols(a)))));
    });
    addax("A31", [](Gen& g) {
        TermPtr a = g.matrix_term(1);
        return implies(eq(cols(a), lit(1)), eq(sum_term(a), sum_term(transpose_of(a))));
    });
    addax("A32", [](Gen& g) {
        TermPtr a = g.matrix_term(1);
        auto big = land(le(add(lit(1), lit(1)), rows(a)), le(add(lit(1), lit(1)), cols(a)));
        auto decomposed = add(add(entry(a, lit(1), lit(1)), sum_term(block_r(a))),
                              add(sum_term(block_s(a)), sum_term(block_m(a))));
        return implies(big, eq(sum_term(a), decomposed));
    });
    addax("A33", [](Gen& g) {
        TermPtr a = g.matrix_term(1);
        return implies(lor(eq(rows(a), lit(0)), eq(cols(a), lit(0))),
                       eq(sum_term(a), lit_sorted(0, Sort::Ring)));
    });

    return out;
}

} // namespace

std::string describe_env(const Environment& env) {
    std::ostringstream os;
    for (const auto& [k, v] : env.indices()) os << k << "=" << v << " ";
    for (const auto& [k, v] : env.rings()) os << k << "=" << v << " ";
    for (const auto& [k, v] : env.matrices()) {
        os << k << "=[" << v.rows << "x" << v.cols << ":";
        for (long long e : v.a) os << " " << e;
        os << "] ";
    }
    return os.str();
}

AxiomReport check_axioms(unsigned trials, unsigned long long seed, const EvalBudget& budget) {
    AxiomReport report;
    report.trials_per_axiom = trials;
    report.seed = seed;

    // instance callbacks return a failure description, empty on success
    auto run = [&](const std::string& name, const std::function<std::string(Gen&)>& instance,
                   unsigned long long salt) {
        AxiomResult res;
        res.name = name;
        res.trials = trials;
        Gen g(seed ^ (salt * 0x9e3779b97f4a7c15ULL + 1));
        for (unsigned t = 0; t < trials; ++t) {
            std::string failed = instance(g);
            if (!failed.empty()) {
                ++res.failures;
                if (res.first_failure.empty())
                    res.first_failure = "trial " + std::to_string(t) + ": " + failed;
            }
        }
        report.results.push_back(std::move(res));
    };

    unsigned long long salt = 1;
    for (const auto& [name, build] : axiom_builders()) {
        run(
            name,
            [&build, &budget](Gen& g) -> std::string {
                FormulaPtr inst = build(g);
                Environment env = g.environment();
                if (eval_formula(inst, env, budget)) return {};
                return print_formula(inst) + "  with  " + describe_env(env);
            },
            salt++);
    }

    // Matrix equality rule: when r, c and all entries agree, T = U holds.
    run(
        "matrix-eq-rule",
        [&budget](Gen& g) -> std::string {
            Environment env = g.environment();
            TermPtr u = g.matrix_term(1);
            TermPtr t = g.coin()
                            ? lam("p", "q", rows(u), cols(u), entry(u, var("p"), var("q")))
                            : g.matrix_term(1);
            IntMatrix tv = std::get<IntMatrix>(eval_term(t, env, budget));
            IntMatrix uv = std::get<IntMatrix>(eval_term(u, env, budget));
            bool premises = tv.rows == uv.rows && tv.cols == uv.cols && tv.a == uv.a;
            if (!premises) return {};  // vacuous
            if (eval_formula(eq(t, u), env, budget)) return {};
            return print_term(t) + " = " + print_term(u) + "  with  " + describe_env(env);
        },
        1001);

    // Induction rule on Sigma-0-B instances: if alpha(i) -> alpha(i+1)
    // holds below the bound, then alpha(0) -> alpha(bound).
    run(
        "induction-rule",
        [&budget](Gen& g) -> std::string {
            Environment env = g.environment();
            FormulaPtr alpha = g.index_guard(2);  // free index vars include i
            IndexValue n = g.index_value();
            bool steps = true;
            for (IndexValue v = 0; v < n && steps; ++v) {
                Environment e1 = env, e2 = env;
                e1.set_index("i", v);
                e2.set_index("i", v + 1);
                if (eval_formula(alpha, e1, budget) && !eval_formula(alpha, e2, budget))
                    steps = false;
            }
            if (!steps) return {};  // premise fails, instance vacuous
            Environment e0 = env, en = env;
            e0.set_index("i", 0);
            en.set_index("i", n);
            if (!eval_formula(alpha, e0, budget)) return {};
            if (eval_formula(alpha, en, budget)) return {};
            return "induction on " + print_formula(alpha) + " up to " + std::to_string(n) +
                   "  with  " + describe_env(env);
        },
        1002);

    return report;
}

} // namespace kmm::la
