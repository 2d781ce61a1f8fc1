#include "kmm/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace kmm {

void OracleBudget::check_dimension(index_t n, const char* what) const {
    if (n > max_dimension)
        throw budget_exceeded(std::string(what) + ": dimension " + std::to_string(n) +
                              " exceeds budget " + std::to_string(max_dimension));
    if (n > 20)
        throw budget_exceeded(std::string(what) + ": dimension beyond feasible enumeration");
}

void OracleBudget::check_vertices(index_t n, const char* what) const {
    if (n > max_dimension + 2)
        throw budget_exceeded(std::string(what) + ": vertex count " + std::to_string(n) +
                              " exceeds budget " + std::to_string(max_dimension + 2));
}

void OracleBudget::check_edges(index_t m, const char* what) const {
    if (m > max_edges)
        throw budget_exceeded(std::string(what) + ": edge count " + std::to_string(m) +
                              " exceeds budget " + std::to_string(max_edges));
}

void OracleBudget::check_elements(index_t n, const char* what) const {
    if (n > max_elements)
        throw budget_exceeded(std::string(what) + ": element count " + std::to_string(n) +
                              " exceeds budget " + std::to_string(max_elements));
}

namespace {

/// Visit size-s subsets of {0..total-1} in lexicographic order; stop
/// when the visitor returns true.
template <typename F>
bool for_each_combination(index_t total, index_t s, F&& visit) {
    std::vector<index_t> comb(s);
    std::iota(comb.begin(), comb.end(), index_t{0});
    if (s > total) return false;
    while (true) {
        if (visit(comb)) return true;
        // advance
        index_t i = s;
        while (i > 0) {
            --i;
            if (comb[i] + (s - i) < total) {
                ++comb[i];
                for (index_t j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
                break;
            }
            if (i == 0) return false;
        }
        if (s == 0) return false;
    }
}

} // namespace

Cover oracle_min_cover(const BoolMatrix& a, const OracleBudget& budget) {
    if (!a.square()) throw invalid_input("oracle_min_cover: non-square matrix");
    const index_t n = a.rows();
    budget.check_dimension(n, "oracle_min_cover");
    if (n == 0) return Cover::empty(0);

    std::vector<std::uint64_t> row(n);
    for (index_t i = 0; i < n; ++i) row[i] = a.row_mask(i);

    // Lines 0..n-1 are rows, n..2n-1 are columns.
    for (index_t s = 0; s <= 2 * n; ++s) {
        Cover found = Cover::empty(n);
        bool ok = for_each_combination(2 * n, s, [&](const std::vector<index_t>& comb) {
            std::uint64_t rmask = 0, cmask = 0;
            for (index_t line : comb) {
                if (line < n)
                    rmask |= std::uint64_t{1} << line;
                else
                    cmask |= std::uint64_t{1} << (line - n);
            }
            for (index_t i = 0; i < n; ++i) {
                if (rmask & (std::uint64_t{1} << i)) continue;
                if (row[i] & ~cmask) return false;  // uncovered 1 in row i
            }
            std::vector<std::uint8_t> rf(n), cf(n);
            for (index_t i = 0; i < n; ++i) {
                rf[i] = (rmask >> i) & 1;
                cf[i] = (cmask >> i) & 1;
            }
            found = Cover(std::move(rf), std::move(cf));
            return true;
        });
        if (ok) return found;
    }
    throw std::logic_error("oracle_min_cover: no cover found");  // unreachable
}

Selection oracle_max_selection(const BoolMatrix& a, const OracleBudget& budget) {
    if (!a.square()) throw invalid_input("oracle_max_selection: non-square matrix");
    const index_t n = a.rows();
    budget.check_dimension(n, "oracle_max_selection");

    std::vector<std::pair<index_t, index_t>> best, cur;
    std::uint64_t used_cols = 0;

    auto dfs = [&](auto&& self, index_t r) -> void {
        if (cur.size() + (n - r) <= best.size()) return;  // cannot exceed best
        if (r == n) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        for (index_t c = 0; c < n; ++c) {
            if (!a.at(r, c) || (used_cols & (std::uint64_t{1} << c))) continue;
            used_cols |= std::uint64_t{1} << c;
            cur.emplace_back(r, c);
            self(self, r + 1);
            cur.pop_back();
            used_cols &= ~(std::uint64_t{1} << c);
        }
        self(self, r + 1);  // leave row r unused
    };
    dfs(dfs, 0);
    return Selection(n, std::move(best));
}

namespace {

std::uint64_t internal_vertex_mask(const VertexSeq& p) {
    std::uint64_t m = 0;
    for (index_t i = 1; i + 1 < p.size(); ++i) m |= std::uint64_t{1} << p[i];
    return m;
}

} // namespace

MengerOracleResult oracle_menger(const TerminalGraph& g, const OracleBudget& budget) {
    budget.check_vertices(g.n(), "oracle_menger");
    const auto all = enumerate_simple_paths(g);

    // Internal disjointness only depends on the internal-vertex set, so
    // collapse the path list to the first path per set.
    std::vector<VertexSeq> reps;
    std::vector<std::uint64_t> masks;
    for (const auto& p : all) {
        std::uint64_t m = internal_vertex_mask(p);
        if (std::find(masks.begin(), masks.end(), m) == masks.end()) {
            masks.push_back(m);
            reps.push_back(p);
        }
    }

    std::vector<index_t> chosen, witness;
    auto pick = [&](auto&& self, index_t start, index_t remaining, std::uint64_t acc) -> bool {
        if (remaining == 0) {
            witness = chosen;
            return true;
        }
        for (index_t i = start; i + remaining <= masks.size(); ++i) {
            if (masks[i] & acc) continue;
            chosen.push_back(i);
            if (self(self, i + 1, remaining - 1, acc | masks[i])) return true;
            chosen.pop_back();
        }
        return false;
    };

    index_t lambda = 0;
    for (index_t k = 1; k <= reps.size(); ++k) {
        chosen.clear();
        if (!pick(pick, 0, k, 0)) break;
        lambda = k;
    }
    std::vector<VertexSeq> bestpaths;
    if (lambda > 0) {
        chosen.clear();
        pick(pick, 0, lambda, 0);
        for (index_t i : witness) bestpaths.push_back(reps[i]);
    }

    const auto edges = g.edges();
    budget.check_edges(edges.size(), "oracle_menger");
    index_t kappa = 0;
    std::vector<Edge> cut_edges;
    for (index_t s = 0; s <= edges.size(); ++s) {
        std::vector<Edge> sel;
        bool ok = for_each_combination(edges.size(), s, [&](const std::vector<index_t>& comb) {
            sel.clear();
            for (index_t i : comb) sel.push_back(edges[i]);
            return separates(g, sel);
        });
        if (ok) {
            kappa = s;
            cut_edges = sel;
            break;
        }
    }

    MengerOracleResult res;
    res.lambda = lambda;
    res.kappa = kappa;
    res.paths = PathCollection(g, std::move(bestpaths));
    res.cut = EdgeCut(g, std::move(cut_edges));
    return res;
}

bool is_restricted_pair(const TerminalGraph& g, const OracleBudget& budget) {
    budget.check_vertices(g.n(), "is_restricted_pair");
    return is_restricted_pair(g);
}

HallOracleResult oracle_hall(const SetSystem& s, const OracleBudget& budget) {
    budget.check_elements(s.n(), "oracle_hall");
    const index_t n = s.n();

    HallOracleResult res;
    res.union_prop = union_property(s);

    std::vector<index_t> assign(n, 0);
    std::uint64_t used = 0;
    auto backtrack = [&](auto&& self, index_t i) -> bool {
        if (i == n) return true;
        for (index_t e = 0; e < n; ++e) {
            if (!s.contains(i, e) || (used & (std::uint64_t{1} << e))) continue;
            used |= std::uint64_t{1} << e;
            assign[i] = e;
            if (self(self, i + 1)) return true;
            used &= ~(std::uint64_t{1} << e);
        }
        return false;
    };
    if (backtrack(backtrack, 0)) res.sdr = SdrAssignment(s, assign);
    return res;
}

DilworthOracleResult oracle_dilworth(const Poset& p, const OracleBudget& budget) {
    budget.check_elements(p.n(), "oracle_dilworth");
    const index_t n = p.n();

    DilworthOracleResult res;
    if (n == 0) return res;

    std::vector<std::uint64_t> comp(n, 0);
    for (index_t i = 0; i < n; ++i)
        for (index_t j = 0; j < n; ++j)
            if (i != j && p.comparable(i, j)) comp[i] |= std::uint64_t{1} << j;

    // Maximum antichain: subsets in ascending mask order, first maximum kept.
    std::uint64_t best_mask = 0;
    int best_count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool anti = true;
        for (index_t i = 0; i < n && anti; ++i)
            if ((mask >> i) & 1)
                if (comp[i] & mask) anti = false;
        if (anti && std::popcount(mask) > best_count) {
            best_count = std::popcount(mask);
            best_mask = mask;
        }
    }
    std::vector<index_t> anti_elems;
    for (index_t i = 0; i < n; ++i)
        if ((best_mask >> i) & 1) anti_elems.push_back(i);
    res.lambda = anti_elems.size();
    res.antichain = AntiChain(p, std::move(anti_elems));

    // Minimum chain partition: restricted growth strings, increasing
    // block count, lexicographic within a count.
    for (index_t k = 1; k <= n; ++k) {
        std::vector<index_t> rgs(n, 0);
        bool found = false;
        auto walk = [&](auto&& self, index_t i, index_t blocks) -> bool {
            if (i == n) {
                if (blocks != k) return false;
                std::vector<std::uint64_t> block_mask(k, 0);
                for (index_t e = 0; e < n; ++e) block_mask[rgs[e]] |= std::uint64_t{1} << e;
                for (index_t b = 0; b < k; ++b) {
                    std::uint64_t m = block_mask[b];
                    for (index_t e = 0; e < n; ++e)
                        if ((m >> e) & 1)
                            if ((m & ~(std::uint64_t{1} << e)) & ~comp[e]) return false;
                }
                return true;
            }
            for (index_t b = 0; b <= blocks && b < k; ++b) {
                rgs[i] = b;
                if (self(self, i + 1, std::max(blocks, b + 1))) return true;
            }
            return false;
        };
        rgs[0] = 0;
        found = walk(walk, 1, 1);
        if (found) {
            res.kappa = k;
            std::vector<std::vector<index_t>> blocks(k);
            for (index_t e = 0; e < n; ++e) blocks[rgs[e]].push_back(e);
            res.chains = ChainPartition(p, std::move(blocks));
            break;
        }
    }

    if (res.lambda != res.kappa)
        throw std::logic_error("oracle_dilworth: antichain/partition sizes diverge");
    return res;
}

} // namespace kmm
