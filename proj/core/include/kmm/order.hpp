#ifndef KMM_ORDER_HPP
#define KMM_ORDER_HPP

#include <optional>
#include <vector>

#include "kmm/certificate.hpp"
#include "kmm/matrix.hpp"

namespace kmm {

struct SolverOptions;

/// n subsets of {0..n-1} as a square incidence matrix: rows are sets,
/// columns are elements, incidence(i,j) = 1 iff j is in S_i.
class SetSystem {
public:
    explicit SetSystem(BoolMatrix incidence);
    static SetSystem from_sets(index_t n, const std::vector<std::vector<index_t>>& sets);

    index_t n() const { return incidence_.rows(); }
    const BoolMatrix& incidence() const { return incidence_; }
    bool contains(index_t set, index_t element) const { return incidence_.at(set, element); }

private:
    BoolMatrix incidence_;
};

/// Distinct representatives a_i in S_i, one per set.
class SdrAssignment {
public:
    SdrAssignment(const SetSystem& s, std::vector<index_t> assignment);

    const std::vector<index_t>& assignment() const { return assignment_; }

private:
    std::vector<index_t> assignment_;
};

/// Strict partial order on {0..n-1} as a matrix: lt(i,j) = 1 iff i < j.
/// Irreflexivity, antisymmetry and transitivity are enforced.
class Poset {
public:
    explicit Poset(BoolMatrix lt);

    index_t n() const { return lt_.rows(); }
    const BoolMatrix& lt() const { return lt_; }
    bool less(index_t i, index_t j) const { return lt_.at(i, j); }
    bool comparable(index_t i, index_t j) const { return less(i, j) || less(j, i); }

private:
    BoolMatrix lt_;
};

/// Disjoint chains covering the whole poset; each chain is a sorted
/// element set, totally ordered under lt.
class ChainPartition {
public:
    ChainPartition() = default;
    ChainPartition(const Poset& p, std::vector<std::vector<index_t>> chains);

    index_t size() const { return chains_.size(); }
    const std::vector<std::vector<index_t>>& chains() const { return chains_; }

private:
    std::vector<std::vector<index_t>> chains_;
};

/// Pairwise incomparable element set.
class AntiChain {
public:
    AntiChain() = default;
    AntiChain(const Poset& p, std::vector<index_t> elements);

    index_t size() const { return elements_.size(); }
    const std::vector<index_t>& elements() const { return elements_; }

private:
    std::vector<index_t> elements_;
};

/// Hall's condition on the rows of an incidence matrix (sets may live
/// in a rectangular universe): every nonempty choice of k rows jointly
/// contains at least k elements. Checked over all 2^rows - 1 subsets;
/// rows are capped at 20 to keep the enumeration sane.
bool union_property_rows(const BoolMatrix& incidence);
bool union_property(const SetSystem& s);

/// Read off an SDR from a full-term-rank incidence matrix: the maximum
/// selection of the incidence matrix must be a permutation, and a_i is
/// its pick in row i. Throws invalid_input when the selection is
/// smaller than n (the union property failed upstream).
SdrAssignment sdr_from_selection(const SetSystem& s, const SolverOptions& opts);

/// The four blocks of A after permuting a minimal cover's e flagged
/// rows and f flagged columns to the front (stable order). A1 is e x f,
/// A2 is e x (n-f), A3 is (n-e) x f, and A4 is all-zero (every 1 there
/// would be uncovered). Rejects invalid or non-minimal covers.
struct HallBlocks {
    BoolMatrix a1, a2, a3, a4;
    index_t e, f;
};
HallBlocks hall_block_decomposition(const BoolMatrix& a, const Cover& alpha,
                                    const SolverOptions& opts);

/// Union property of A2's rows and of A3-transpose's rows; both hold
/// for blocks cut along a minimal cover.
bool union_property_of_blocks(const BoolMatrix& a2, const BoolMatrix& a3);

/// Chains-by-elements incidence: entry (i,j) = 1 iff chain i contains
/// element j. Every column has exactly one 1.
BoolMatrix chains_element_incidence(const Poset& p, const ChainPartition& chains);

/// The elements picked by a maximum selection of the chains/elements
/// incidence, validated pairwise incomparable. Throws
/// construction_failure on a comparability violation (a one-per-chain
/// pick need not be an antichain for every maximum selection).
AntiChain antichain_from_selection(const Poset& p, const ChainPartition& chains,
                                   const Selection& beta);

/// Height-2 poset on {x_1..x_n} + {S_1..S_n} with x_i < S_j iff
/// incidence(i,j) = 1 (no other relations). Elements 0..n-1 are the
/// x's, n..2n-1 the S's.
Poset poset_from_set_system(const SetSystem& s);

/// Read an SDR off a partition of poset_from_set_system(s) into n
/// two-element chains {x_i, S_j}: each such chain contributes the
/// representative j for set i. Rejects partitions with a chain not of
/// that shape.
SdrAssignment sdr_from_chain_partition(const SetSystem& s, const ChainPartition& chains);

} // namespace kmm

#endif
