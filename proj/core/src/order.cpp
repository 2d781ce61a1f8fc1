#include "kmm/order.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "kmm/solver.hpp"

namespace kmm {

SetSystem::SetSystem(BoolMatrix incidence) : incidence_(std::move(incidence)) {
    if (!incidence_.square()) throw invalid_input("SetSystem: incidence must be square");
}

SetSystem SetSystem::from_sets(index_t n, const std::vector<std::vector<index_t>>& sets) {
    if (sets.size() != n) throw invalid_input("SetSystem: expected n sets");
    BoolMatrix inc(n, n);
    for (index_t i = 0; i < n; ++i)
        for (index_t e : sets[i]) {
            if (e >= n) throw invalid_input("SetSystem: element out of range");
            inc.set(i, e, true);
        }
    return SetSystem(std::move(inc));
}

SdrAssignment::SdrAssignment(const SetSystem& s, std::vector<index_t> assignment)
    : assignment_(std::move(assignment)) {
    if (assignment_.size() != s.n()) throw invalid_input("SdrAssignment: wrong length");
    std::vector<std::uint8_t> used(s.n(), 0);
    for (index_t i = 0; i < assignment_.size(); ++i) {
        index_t a = assignment_[i];
        if (a >= s.n() || !s.contains(i, a))
            throw invalid_input("SdrAssignment: representative not a member of its set");
        if (used[a]) throw invalid_input("SdrAssignment: representatives not distinct");
        used[a] = 1;
    }
}

Poset::Poset(BoolMatrix lt) : lt_(std::move(lt)) {
    if (!lt_.square()) throw invalid_input("Poset: relation matrix must be square");
    const index_t n = lt_.rows();
    for (index_t i = 0; i < n; ++i) {
        if (lt_.at(i, i)) throw invalid_input("Poset: relation not irreflexive");
        for (index_t j = 0; j < n; ++j) {
            if (i != j && lt_.at(i, j) && lt_.at(j, i))
                throw invalid_input("Poset: relation not antisymmetric");
            for (index_t k = 0; k < n; ++k)
                if (lt_.at(i, j) && lt_.at(j, k) && !lt_.at(i, k))
                    throw invalid_input("Poset: relation not transitive");
        }
    }
}

ChainPartition::ChainPartition(const Poset& p, std::vector<std::vector<index_t>> chains)
    : chains_(std::move(chains)) {
    std::vector<std::uint8_t> seen(p.n(), 0);
    index_t covered = 0;
    for (auto& chain : chains_) {
        if (chain.empty()) throw invalid_input("ChainPartition: empty chain");
        std::sort(chain.begin(), chain.end());
        for (index_t e : chain) {
            if (e >= p.n() || seen[e]) throw invalid_input("ChainPartition: not a partition");
            seen[e] = 1;
            ++covered;
        }
        for (index_t a = 0; a < chain.size(); ++a)
            for (index_t b = a + 1; b < chain.size(); ++b)
                if (!p.comparable(chain[a], chain[b]))
                    throw invalid_input("ChainPartition: chain contains incomparable elements");
    }
    if (covered != p.n()) throw invalid_input("ChainPartition: elements left uncovered");
}

AntiChain::AntiChain(const Poset& p, std::vector<index_t> elements)
    : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    for (index_t a = 0; a < elements_.size(); ++a) {
        if (elements_[a] >= p.n()) throw invalid_input("AntiChain: element out of range");
        if (a > 0 && elements_[a] == elements_[a - 1])
            throw invalid_input("AntiChain: duplicate element");
        for (index_t b = a + 1; b < elements_.size(); ++b)
            if (p.comparable(elements_[a], elements_[b]))
                throw invalid_input("AntiChain: comparable elements");
    }
}

bool union_property_rows(const BoolMatrix& incidence) {
    const index_t rows = incidence.rows();
    if (rows > 20) throw budget_exceeded("union_property: too many sets to enumerate");
    if (rows == 0) return true;
    std::vector<std::uint64_t> row(rows);
    for (index_t i = 0; i < rows; ++i) row[i] = incidence.row_mask(i);
    for (std::uint64_t k = 1; k < (std::uint64_t{1} << rows); ++k) {
        std::uint64_t u = 0;
        for (index_t i = 0; i < rows; ++i)
            if ((k >> i) & 1) u |= row[i];
        if (std::popcount(u) < std::popcount(k)) return false;
    }
    return true;
}

bool union_property(const SetSystem& s) { return union_property_rows(s.incidence()); }

SdrAssignment sdr_from_selection(const SetSystem& s, const SolverOptions& opts) {
    const index_t n = s.n();
    Selection sel = max_selection(s.incidence(), opts);
    if (sel.size() < n)
        throw invalid_input("sdr_from_selection: term rank below n, no SDR (union property "
                            "fails upstream)");
    std::vector<index_t> assign(n, 0);
    for (auto [i, j] : sel.picks()) assign[i] = j;
    return SdrAssignment(s, std::move(assign));
}

HallBlocks hall_block_decomposition(const BoolMatrix& a, const Cover& alpha,
                                    const SolverOptions& opts) {
    if (!is_cover(a, alpha)) throw invalid_input("hall_block_decomposition: not a cover");
    if (alpha.size() != min_cover(a, opts).size())
        throw invalid_input("hall_block_decomposition: cover is not minimal");
    const index_t n = a.rows();

    std::vector<index_t> row_order, col_order;
    for (index_t i = 0; i < n; ++i)
        if (alpha.row(i)) row_order.push_back(i);
    const index_t e = row_order.size();
    for (index_t i = 0; i < n; ++i)
        if (!alpha.row(i)) row_order.push_back(i);
    for (index_t j = 0; j < n; ++j)
        if (alpha.col(j)) col_order.push_back(j);
    const index_t f = col_order.size();
    for (index_t j = 0; j < n; ++j)
        if (!alpha.col(j)) col_order.push_back(j);

    auto block = [&](index_t r0, index_t r1, index_t c0, index_t c1) {
        BoolMatrix b(r1 - r0, c1 - c0);
        for (index_t r = r0; r < r1; ++r)
            for (index_t c = c0; c < c1; ++c)
                b.set(r - r0, c - c0, a.at(row_order[r], col_order[c]));
        return b;
    };
    HallBlocks hb{block(0, e, 0, f), block(0, e, f, n), block(e, n, 0, f), block(e, n, f, n),
                  e, f};
    if (sum_entries(hb.a4) != 0)
        throw std::logic_error("internal: uncovered block A4 contains a 1");
    return hb;
}

bool union_property_of_blocks(const BoolMatrix& a2, const BoolMatrix& a3) {
    return union_property_rows(a2) && union_property_rows(a3.transpose());
}

BoolMatrix chains_element_incidence(const Poset& p, const ChainPartition& chains) {
    BoolMatrix inc(chains.size(), p.n());
    for (index_t i = 0; i < chains.size(); ++i)
        for (index_t e : chains.chains()[i]) {
            if (e >= p.n()) throw invalid_input("chains_element_incidence: element out of range");
            inc.set(i, e, true);
        }
    for (index_t j = 0; j < p.n(); ++j) {
        index_t ones = 0;
        for (index_t i = 0; i < chains.size(); ++i) ones += inc.at(i, j);
        if (ones != 1) throw invalid_input("chains_element_incidence: not a partition");
    }
    return inc;
}

AntiChain antichain_from_selection(const Poset& p, const ChainPartition& chains,
                                   const Selection& beta) {
    const index_t n = p.n();
    BoolMatrix inc = chains_element_incidence(p, chains).padded_to(n, n);
    if (beta.n() != n || !is_selection(inc, beta))
        throw invalid_input("antichain_from_selection: beta is not a selection of the "
                            "chains/elements incidence");
    if (beta.size() != chains.size())
        throw invalid_input("antichain_from_selection: beta is not maximum (one pick per chain)");
    std::vector<index_t> elems;
    for (auto [i, j] : beta.picks()) elems.push_back(j);
    for (index_t a = 0; a < elems.size(); ++a)
        for (index_t b = a + 1; b < elems.size(); ++b)
            if (p.comparable(elems[a], elems[b]))
                throw construction_failure(
                    "antichain_from_selection: picked elements are comparable (selection "
                    "was not antichain-inducing)");
    return AntiChain(p, std::move(elems));
}

Poset poset_from_set_system(const SetSystem& s) {
    const index_t n = s.n();
    BoolMatrix lt(2 * n, 2 * n);
    for (index_t i = 0; i < n; ++i)
        for (index_t j = 0; j < n; ++j)
            if (s.contains(i, j)) lt.set(i, n + j, true);  // x_i < S_j
    return Poset(std::move(lt));
}

SdrAssignment sdr_from_chain_partition(const SetSystem& s, const ChainPartition& chains) {
    const index_t n = s.n();
    if (chains.size() != n)
        throw invalid_input("sdr_from_chain_partition: expected a partition into n chains");
    std::vector<index_t> assign(n, n);
    for (const auto& chain : chains.chains()) {
        if (chain.size() != 2 || chain[0] >= n || chain[1] < n)
            throw invalid_input("sdr_from_chain_partition: chain is not an {x_i, S_j} pair");
        const index_t i = chain[0], j = chain[1] - n;
        if (!s.contains(i, j))
            throw invalid_input("sdr_from_chain_partition: pair not related in the poset");
        assign[i] = j;  // the chain x_i < S_j certifies j as a member of S_i
    }
    return SdrAssignment(s, std::move(assign));
}

} // namespace kmm
