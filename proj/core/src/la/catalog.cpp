#include "kmm/la/catalog.hpp"

#include "kmm/errors.hpp"

namespace kmm::la {

namespace {

TermPtr ring0() { return lit_sorted(0, Sort::Ring); }
TermPtr ring1() { return lit_sorted(1, Sort::Ring); }

FormulaPtr ne(TermPtr a, TermPtr b) { return lnot(eq(std::move(a), std::move(b))); }

/// Sigma of one row / one column of a matrix variable, as lambda terms.
TermPtr row_sum(TermPtr m, TermPtr row) {
    return sum_term(lam("p", "q", lit(1), cols(m), entry(m, row, var("q"))));
}
TermPtr col_sum(TermPtr m, TermPtr col) {
    return sum_term(lam("p", "q", lit(1), rows(m), entry(m, var("q"), col)));
}

NamedFormula cover_formula() {
    // every 1 of A lies on a flagged horizontal or vertical line
    auto body = implies(eq(entry(var("A"), var("i"), var("j")), ring1()),
                        lor(eq(entry(var("Alpha"), lit(1), var("i")), ring1()),
                            eq(entry(var("Alpha"), lit(2), var("j")), ring1())));
    auto f = forall_index("i", rows(var("A")),
                          forall_index("j", rows(var("A")), body));
    return {"cover", f, {"A", "Alpha"}, "Alpha rows: line flags (horizontal; vertical)"};
}

NamedFormula select_formula() {
    // picks sit on 1s of A and no line carries two picks; the k-loop
    // excludes the pick's own coordinates
    auto on_ones = implies(eq(entry(var("Beta"), var("i"), var("j")), ring1()),
                           eq(entry(var("A"), var("i"), var("j")), ring1()));
    auto line_free = forall_index(
        "k", rows(var("A")),
        implies(eq(entry(var("Beta"), var("i"), var("j")), ring1()),
                land(implies(ne(var("k"), var("j")),
                             eq(entry(var("Beta"), var("i"), var("k")), ring0())),
                     implies(ne(var("k"), var("i")),
                             eq(entry(var("Beta"), var("k"), var("j")), ring0())))));
    auto f = forall_index("i", rows(var("A")),
                          forall_index("j", rows(var("A")), land(on_ones, line_free)));
    return {"select", f, {"A", "Beta"},
            "the line-exclusion loop skips the pick's own row and column"};
}

/// Path(A, x, y, Alpha). A is the N x N adjacency matrix; internal
/// vertices are numbered 1..N-2 (the columns of Alpha) and x, y are
/// expected to valuate to N-1 and N. Alpha has N-2 rows; rows past the
/// path's length repeat the last internal vertex.
NamedFormula path_formula() {
    TermPtr n2 = sub(rows(var("A")), lit(2));

    auto nonadjacent = eq(entry(var("A"), var("x"), var("y")), ring0());

    auto one_per_row = forall_index("l", n2, eq(row_sum(var("Alpha"), var("l")), ring1()));

    // consecutive distinct marks must be joined by an edge
    auto steps = forall_index(
        "l", sub(n2, lit(1)),
        forall_index(
            "p", n2,
            forall_index(
                "q", n2,
                implies(land(land(eq(entry(var("Alpha"), var("l"), var("p")), ring1()),
                                  eq(entry(var("Alpha"), add(var("l"), lit(1)), var("q")),
                                     ring1())),
                             ne(var("p"), var("q"))),
                        eq(entry(var("A"), var("p"), var("q")), ring1())))));

    // once a row repeats its predecessor the repetition runs to the end
    auto padding_suffix = forall_index(
        "l", sub(n2, lit(1)),
        forall_index(
            "k", n2,
            forall_index(
                "p", n2,
                implies(land(land(eq(entry(var("Alpha"), var("l"), var("p")), ring1()),
                                  eq(entry(var("Alpha"), add(var("l"), lit(1)), var("p")),
                                     ring1())),
                             le(add(var("l"), lit(1)), var("k"))),
                        eq(entry(var("Alpha"), var("k"), var("p")), ring1())))));

    // a column's support is contiguous, so no vertex recurs later
    auto contiguous = forall_index(
        "l", n2,
        forall_index(
            "k", n2,
            forall_index(
                "p", n2,
                implies(land(land(eq(entry(var("Alpha"), var("l"), var("p")), ring1()),
                                  eq(entry(var("Alpha"), var("k"), var("p")), ring1())),
                             le(add(var("l"), lit(1)), var("k"))),
                        eq(entry(var("Alpha"), add(var("l"), lit(1)), var("p")), ring1())))));

    auto endpoints = forall_index(
        "i", n2,
        land(implies(eq(entry(var("Alpha"), lit(1), var("i")), ring1()),
                     eq(entry(var("A"), var("x"), var("i")), ring1())),
             implies(eq(entry(var("Alpha"), n2, var("i")), ring1()),
                     eq(entry(var("A"), var("i"), var("y")), ring1()))));

    auto f = land_all({nonadjacent, one_per_row, steps, padding_suffix, contiguous, endpoints});
    return {"path", f, {"A", "x", "y", "Alpha"},
            "padded encoding: repeated last row, so column sums may exceed one"};
}

NamedFormula disjoint_formula() {
    TermPtr n2 = sub(rows(var("A")), lit(2));
    NamedFormula path = path_formula();
    auto path2 = subst_formula(path.formula, {{"Alpha", var("Alpha2")}});
    // no internal vertex (column) is used by both encodings
    auto no_shared_vertex = forall_index(
        "p", n2,
        lnot(land(exists_index("l", n2, eq(entry(var("Alpha"), var("l"), var("p")), ring1())),
                  exists_index("k", n2,
                               eq(entry(var("Alpha2"), var("k"), var("p")), ring1())))));
    auto f = land_all({path.formula, path2, no_shared_vertex});
    return {"disjoint", f, {"A", "x", "y", "Alpha", "Alpha2"},
            "internal disjointness is per vertex (column), not per position"};
}

NamedFormula sdr_formula() {
    TermPtr n = rows(var("A"));
    // Perm(P): square of side n with unit row and column sums (the
    // quantifier already restricts entries to 0/1)
    auto perm = land_all({eq(rows(var("P")), n), eq(cols(var("P")), n),
                          forall_index("i", n, land(eq(row_sum(var("P"), var("i")), ring1()),
                                                    eq(col_sum(var("P"), var("i")), ring1())))});
    // (AP)(i,i) = Sigma_q A(i,q) * P(q,i)
    TermPtr ap_ii = sum_term(lam("p", "q", lit(1), n,
                                 mul(entry(var("A"), var("i"), var("q")),
                                     entry(var("P"), var("q"), var("i")))));
    auto diag = forall_index("i", n, eq(ap_ii, ring1()));
    auto f = exists_matrix("P", n, land(perm, diag));
    return {"sdr", f, {"A"}, "term-rank-n query via an existential permutation"};
}

NamedFormula chain_formula() {
    auto marked = [](TermPtr i) { return eq(entry(var("Alpha"), lit(1), std::move(i)), ring1()); };
    auto body = implies(land(land(ne(var("i"), var("j")), marked(var("i"))), marked(var("j"))),
                        lor(eq(entry(var("A"), var("i"), var("j")), ring1()),
                            eq(entry(var("A"), var("j"), var("i")), ring1())));
    auto f = forall_index("i", rows(var("A")), forall_index("j", rows(var("A")), body));
    return {"chain", f, {"A", "Alpha"}, "A is the strict-order matrix of the poset"};
}

} // namespace

std::vector<NamedFormula> predicate_catalog() {
    return {cover_formula(), select_formula(), path_formula(),
            disjoint_formula(), sdr_formula(), chain_formula()};
}

const NamedFormula& catalog_formula(const std::string& name) {
    static const std::vector<NamedFormula> catalog = predicate_catalog();
    for (const auto& nf : catalog)
        if (nf.name == name) return nf;
    throw invalid_input("no catalog formula named '" + name + "'");
}

} // namespace kmm::la
