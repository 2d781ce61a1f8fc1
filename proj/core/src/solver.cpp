#include "kmm/solver.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "kmm/diagonal.hpp"
#include "kmm/oracle.hpp"

namespace kmm {
namespace {

/// Re-index a cover of the principal submatrix into the full matrix
/// (all line indices shifted by one; the first row/column unflagged).
Cover extend_cover(const Cover& cm) {
    const index_t n = cm.n() + 1;
    std::vector<std::uint8_t> rows(n, 0), cols(n, 0);
    for (index_t i = 0; i < cm.n(); ++i) {
        rows[i + 1] = cm.row_flags()[i];
        cols[i + 1] = cm.col_flags()[i];
    }
    return Cover(std::move(rows), std::move(cols));
}

Selection lift_selection(const Selection& sm) {
    std::vector<std::pair<index_t, index_t>> picks;
    picks.reserve(sm.size());
    for (auto [r, c] : sm.picks()) picks.emplace_back(r + 1, c + 1);
    return Selection(sm.n() + 1, std::move(picks));
}

Selection add_pick(const Selection& s, index_t r, index_t c) {
    auto picks = s.picks();
    picks.emplace_back(r, c);
    return Selection(s.n(), std::move(picks));
}

Cover min_cover_diag(const BoolMatrix& d, const SolverOptions& opts);

Cover min_cover_full(const BoolMatrix& a, const SolverOptions& opts) {
    auto diag = diagonalize(a);
    Cover cd = min_cover_diag(diag.transformed, opts);
    return permute_cover(cd, diag.p.inverse(), diag.q.inverse());
}

/// Close the first layer of a diagonal-form matrix with D(0,0) = 1,
/// given a minimal cover of the principal submatrix M. Returns a
/// minimal cover of D: of size l_M + 1 when M can shed the R-columns
/// (or S-rows) cheaply enough, else l_M + 2.
Cover close_cover_first_layer(const BoolMatrix& d, const BoolMatrix& m, const Cover& cm,
                              const SolverOptions& opts) {
    const index_t n = d.rows();
    const index_t lm = cm.size();

    std::vector<std::uint8_t> rflags(n - 1), sflags(n - 1);
    index_t sum_r = 0, sum_s = 0;
    for (index_t j = 1; j < n; ++j) {
        rflags[j - 1] = d.at(0, j);
        sum_r += d.at(0, j);
    }
    for (index_t i = 1; i < n; ++i) {
        sflags[i - 1] = d.at(i, 0);
        sum_s += d.at(i, 0);
    }

    // R-case: a cover of D of size l_M + 1 through the first column
    // exists iff M minus the R-columns has a cover of size l_M - sum(R).
    if (sum_r <= lm) {
        Cover cz = min_cover_full(m.with_columns_zeroed(rflags), opts);
        if (cz.size() + sum_r < lm)
            throw std::logic_error("internal: shed cover beats the minimal cover of M");
        if (cz.size() + sum_r == lm) {
            auto rows = cz.row_flags();
            auto cols = cz.col_flags();
            for (index_t j = 0; j + 1 < n; ++j)
                if (rflags[j]) cols[j] = 1;  // minimal cz never flags a zeroed column
            return extend_cover(Cover(std::move(rows), std::move(cols))).with_col(0);
        }
    }
    // S-case, mirrored: close with the first row instead.
    if (sum_s <= lm) {
        Cover cz = min_cover_full(m.with_rows_zeroed(sflags), opts);
        if (cz.size() + sum_s < lm)
            throw std::logic_error("internal: shed cover beats the minimal cover of M");
        if (cz.size() + sum_s == lm) {
            auto rows = cz.row_flags();
            auto cols = cz.col_flags();
            for (index_t i = 0; i + 1 < n; ++i)
                if (sflags[i]) rows[i] = 1;
            return extend_cover(Cover(std::move(rows), std::move(cols))).with_row(0);
        }
    }
    return extend_cover(cm).with_row(0).with_col(0);
}

Cover min_cover_diag(const BoolMatrix& d, const SolverOptions& opts) {
    const index_t n = d.rows();
    if (n == 0) return Cover::empty(0);
    BoolMatrix m = d.principal_submatrix();  // inherits the diagonal property
    Cover cm = min_cover_diag(m, opts);
    if (!d.top_left()) return extend_cover(cm);  // layer 1 is all-zero
    return close_cover_first_layer(d, m, cm, opts);
}

/// The two uncovered lines the first-layer selection wants to use:
/// columns of R-1s and rows of S-1s the extended cover misses.
struct LayerCoverage {
    std::vector<index_t> uncovered_r_cols;  // D column indices (>= 1)
    std::vector<index_t> uncovered_s_rows;  // D row indices (>= 1)
};

LayerCoverage layer_coverage(const BoolMatrix& d, const Cover& cm) {
    LayerCoverage lc;
    const index_t n = d.rows();
    for (index_t j = 1; j < n; ++j)
        if (d.at(0, j) && !cm.col(j - 1)) lc.uncovered_r_cols.push_back(j);
    for (index_t i = 1; i < n; ++i)
        if (d.at(i, 0) && !cm.row(i - 1)) lc.uncovered_s_rows.push_back(i);
    return lc;
}

/// Attempt the subcase construction: lifted picks + an uncovered R-1 at
/// (0, jr) + an uncovered S-1 at (is, 0). A lifted pick sharing a line
/// with an added pick is swapped along its covering line when possible.
std::optional<Selection> try_two_extra_picks(const BoolMatrix& d, const Selection& lifted,
                                             index_t jr, index_t is, bool* used_swap,
                                             bool* saw_conflict) {
    const index_t n = d.rows();
    auto picks = lifted.picks();
    *used_swap = false;

    int col_conflict = -1, row_conflict = -1;
    for (std::size_t k = 0; k < picks.size(); ++k) {
        if (picks[k].second == jr) col_conflict = static_cast<int>(k);
        if (picks[k].first == is) row_conflict = static_cast<int>(k);
    }
    if (col_conflict >= 0 || row_conflict >= 0) *saw_conflict = true;
    if (col_conflict >= 0 && col_conflict == row_conflict) return std::nullopt;

    auto col_used = [&](index_t c) {
        for (auto& p : picks)
            if (p.second == c) return true;
        return false;
    };
    auto row_used = [&](index_t r) {
        for (auto& p : picks)
            if (p.first == r) return true;
        return false;
    };

    if (col_conflict >= 0) {
        // jr is uncovered, so this pick is covered by its (flagged) row;
        // slide it to another 1 of that row.
        auto [r, c] = picks[col_conflict];
        bool moved = false;
        for (index_t c2 = 1; c2 < n && !moved; ++c2) {
            if (c2 == jr || !d.at(r, c2) || col_used(c2)) continue;
            picks[col_conflict] = {r, c2};
            moved = true;
        }
        if (!moved) return std::nullopt;
        *used_swap = true;
    }
    if (row_conflict >= 0) {
        auto [r, c] = picks[row_conflict];
        bool moved = false;
        for (index_t r2 = 1; r2 < n && !moved; ++r2) {
            if (r2 == is || !d.at(r2, c) || row_used(r2)) continue;
            picks[row_conflict] = {r2, c};
            moved = true;
        }
        if (!moved) return std::nullopt;
        *used_swap = true;
    }

    picks.emplace_back(0, jr);
    picks.emplace_back(is, 0);

    // Final validity sweep; the swaps above may have interacted.
    std::vector<std::uint8_t> ru(n, 0), cu(n, 0);
    for (auto [r, c] : picks) {
        if (!d.at(r, c) || ru[r] || cu[c]) return std::nullopt;
        ru[r] = 1;
        cu[c] = 1;
    }
    return Selection(n, std::move(picks));
}

struct DiagSolution {
    Cover cover;
    Selection sel;
};

DiagSolution solve_diag(const BoolMatrix& d, const SolverOptions& opts) {
    const index_t n = d.rows();
    if (n == 0) return {Cover::empty(0), Selection::empty(0)};
    BoolMatrix m = d.principal_submatrix();
    DiagSolution sub = solve_diag(m, opts);
    if (!d.top_left()) return {extend_cover(sub.cover), lift_selection(sub.sel)};

    const index_t lm = sub.cover.size();
    Cover cover = close_cover_first_layer(d, m, sub.cover, opts);
    Selection lifted = lift_selection(sub.sel);
    Selection corner = add_pick(lifted, 0, 0);  // always line-disjoint from lifted picks

    Selection sel = corner;
    if (lm == n - 1) {
        // subcase 1-a: n disjoint picks, n lines cover
    } else {
        LayerCoverage lc = layer_coverage(d, sub.cover);
        if (lc.uncovered_r_cols.empty() || lc.uncovered_s_rows.empty()) {
            // subcase 1-b-i: the extension covers all of R or all of S
        } else if (cover.size() == lm + 1) {
            // Another minimal cover of M passes the shed test even though
            // this one leaves both tails uncovered; the corner pick is
            // already optimal.
        } else {
            // subcase 1-b-ii: grow by two
            std::optional<Selection> two;
            bool used_swap = false, saw_conflict = false;
            for (index_t jr : lc.uncovered_r_cols) {
                for (index_t is : lc.uncovered_s_rows) {
                    two = try_two_extra_picks(d, lifted, jr, is, &used_swap, &saw_conflict);
                    if (two) break;
                }
                if (two) break;
            }
            if (saw_conflict && opts.stats) opts.stats->bii_conflicts++;
            if (two) {
                if (used_swap && opts.stats) opts.stats->bii_repairs++;
                sel = *two;
            } else {
                // The added picks cannot be made line-disjoint from any
                // repairable lift; decide the sub-instance exhaustively.
                if (opts.stats) opts.stats->oracle_fallbacks++;
                OracleBudget fb;
                fb.max_dimension = std::max<index_t>(opts.recursion_cap, fb.max_dimension);
                sel = oracle_max_selection(d, fb);
            }
        }
    }

    if (cover.size() != sel.size())
        throw std::logic_error("internal: cover and selection sizes diverge at n=" +
                               std::to_string(n));
    return {std::move(cover), std::move(sel)};
}

void check_input(const BoolMatrix& a, const SolverOptions& opts, const char* what) {
    if (!a.square()) throw invalid_input(std::string(what) + ": non-square matrix");
    if (a.rows() > opts.recursion_cap)
        throw budget_exceeded(std::string(what) + ": dimension " + std::to_string(a.rows()) +
                              " exceeds recursion cap " + std::to_string(opts.recursion_cap));
}

} // namespace

Cover min_cover(const BoolMatrix& a, const SolverOptions& opts) {
    check_input(a, opts, "min_cover");
    Cover c = min_cover_full(a, opts);
    if (!is_cover(a, c)) throw std::logic_error("internal: min_cover produced a non-cover");
    return c;
}

Selection max_selection(const BoolMatrix& a, const SolverOptions& opts) {
    check_input(a, opts, "max_selection");
    auto diag = diagonalize(a);
    DiagSolution sol = solve_diag(diag.transformed, opts);
    Selection s = permute_selection(sol.sel, diag.p.inverse(), diag.q.inverse());
    if (!is_selection(a, s)) throw std::logic_error("internal: max_selection picked a zero");
    return s;
}

KmmReport kmm_check(const BoolMatrix& a, const SolverOptions& opts) {
    check_input(a, opts, "kmm_check");
    auto diag = diagonalize(a);
    DiagSolution sol = solve_diag(diag.transformed, opts);
    KmmReport rep;
    rep.cover = permute_cover(sol.cover, diag.p.inverse(), diag.q.inverse());
    rep.selection = permute_selection(sol.sel, diag.p.inverse(), diag.q.inverse());
    if (!is_cover(a, rep.cover)) throw std::logic_error("internal: kmm_check cover invalid");
    if (!is_selection(a, rep.selection))
        throw std::logic_error("internal: kmm_check selection invalid");
    rep.l = rep.cover.size();
    rep.o = rep.selection.size();
    rep.equal = rep.l == rep.o;
    return rep;
}

} // namespace kmm
