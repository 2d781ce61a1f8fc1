#ifndef KMM_ORACLE_HPP
#define KMM_ORACLE_HPP

#include <optional>

#include "kmm/certificate.hpp"
#include "kmm/graph.hpp"
#include "kmm/matrix.hpp"
#include "kmm/order.hpp"

namespace kmm {

/// Hard caps for the exhaustive searches. Exceeding a cap throws
/// budget_exceeded, never silently approximates.
struct OracleBudget {
    index_t max_dimension = 10;  // matrix side; graphs allow max_dimension + 2 vertices
    index_t max_edges = 32;      // graph edge count for cut enumeration
    index_t max_elements = 8;    // poset / set-system universe

    void check_dimension(index_t n, const char* what) const;
    void check_vertices(index_t n, const char* what) const;
    void check_edges(index_t m, const char* what) const;
    void check_elements(index_t n, const char* what) const;
};

/// Minimum cover by enumerating line subsets in increasing size, lines
/// ordered rows first then columns, subsets of equal size in
/// lexicographic order; the first cover found wins.
Cover oracle_min_cover(const BoolMatrix& a, const OracleBudget& budget = {});

/// Maximum selection by depth-first backtracking over rows in order;
/// at each row the 1-columns are tried in ascending order before the
/// row is skipped. The first maximum reached in this order wins.
Selection oracle_max_selection(const BoolMatrix& a, const OracleBudget& budget = {});

struct MengerOracleResult {
    index_t lambda = 0;  // max pairwise internally disjoint x,y-paths
    index_t kappa = 0;   // min edge set disconnecting x from y
    PathCollection paths;
    EdgeCut cut;
};

/// Exhaustive lambda (iterative deepening over collection size, paths
/// in depth-first order) and kappa (edge subsets in increasing size,
/// lexicographic over the sorted edge list).
MengerOracleResult oracle_menger(const TerminalGraph& g, const OracleBudget& budget = {});

/// is_restricted_pair with the budget applied to the vertex count.
bool is_restricted_pair(const TerminalGraph& g, const OracleBudget& budget);

struct HallOracleResult {
    bool union_prop = false;
    std::optional<SdrAssignment> sdr;  // absent iff no SDR exists
};

/// Union property over all nonempty index subsets; SDR by backtracking
/// over sets in order, elements in ascending order.
HallOracleResult oracle_hall(const SetSystem& s, const OracleBudget& budget = {});

struct DilworthOracleResult {
    index_t lambda = 0;  // max antichain size
    index_t kappa = 0;   // min number of chains partitioning the poset
    AntiChain antichain;
    ChainPartition chains;
};

/// Exhaustive antichain search (subsets in ascending mask order) and
/// chain partition search (restricted growth strings, block counts
/// increasing). lambda == kappa is asserted.
DilworthOracleResult oracle_dilworth(const Poset& p, const OracleBudget& budget = {});

} // namespace kmm

#endif
