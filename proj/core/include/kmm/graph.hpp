#ifndef KMM_GRAPH_HPP
#define KMM_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "kmm/certificate.hpp"
#include "kmm/matrix.hpp"

namespace kmm {

using VertexSeq = std::vector<index_t>;
using Edge = std::pair<index_t, index_t>;  // normalized: first < second

inline Edge make_edge(index_t u, index_t v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

/// Undirected graph with two distinguished terminals. The adjacency
/// matrix is symmetric with zero diagonal, x != y, and (x,y) is a
/// non-edge; all enforced on construction.
class TerminalGraph {
public:
    TerminalGraph(BoolMatrix adjacency, index_t x, index_t y);

    index_t n() const { return adj_.rows(); }
    index_t x() const { return x_; }
    index_t y() const { return y_; }
    const BoolMatrix& adjacency() const { return adj_; }
    bool has_edge(index_t u, index_t v) const { return adj_.at(u, v) != 0; }

    /// Edges as normalized pairs, lexicographically sorted.
    std::vector<Edge> edges() const;

private:
    BoolMatrix adj_;
    index_t x_, y_;
};

/// Pairwise internally disjoint x,y-paths. Each path is a vertex
/// sequence from x to y; validity and internal disjointness are
/// enforced on construction.
class PathCollection {
public:
    PathCollection() = default;
    PathCollection(const TerminalGraph& g, std::vector<VertexSeq> paths);

    index_t size() const { return paths_.size(); }
    const std::vector<VertexSeq>& paths() const { return paths_; }

private:
    std::vector<VertexSeq> paths_;
};

/// An edge set whose removal leaves no x,y-path; checked by
/// reachability on construction.
class EdgeCut {
public:
    EdgeCut() = default;
    EdgeCut(const TerminalGraph& g, std::vector<Edge> edges);

    index_t size() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool contains(const Edge& e) const;

private:
    std::vector<Edge> edges_;  // sorted
};

/// Paths-by-cut-edges incidence: matrix(i,j) = 1 iff cut edge j lies on
/// path i.
struct PathsCutIncidence {
    BoolMatrix matrix;
    std::vector<index_t> row_labels;  // path indices
    std::vector<Edge> col_labels;     // cut edges
};

/// True iff seq runs from x to y over distinct vertices with every
/// consecutive pair an edge.
bool is_path(const TerminalGraph& g, const VertexSeq& seq);

/// All simple x,y-paths, in depth-first order with ascending neighbor
/// scans. The enumeration order is part of the contract (witnesses of
/// the exhaustive searches are the first hits in this order).
std::vector<VertexSeq> enumerate_simple_paths(const TerminalGraph& g);

/// True iff deleting the given edges leaves no x,y-path.
bool separates(const TerminalGraph& g, const std::vector<Edge>& removed);

/// Fixed-size encoding of a path's internal vertices: an (n-2)x(n-2)
/// 0-1 matrix whose l-th row marks the l-th internal vertex (columns
/// index the non-terminal vertices in ascending vertex order); rows
/// past the end repeat the last internal-vertex row. Requires a real
/// path with at least one internal vertex.
BoolMatrix encode_path_matrix(const TerminalGraph& g, const VertexSeq& seq);

/// Inverse of encode_path_matrix. Returns the vertex sequence if the
/// matrix is a well-formed padded encoding of an x,y-path, nullopt
/// otherwise.
std::optional<VertexSeq> decode_path_matrix(const TerminalGraph& g, const BoolMatrix& enc);

/// True iff every simple x,y-path shares at least one edge with at
/// most one other simple x,y-path. Requires path enumeration; capped
/// by the caller via the oracle budget (see oracle.hpp overload).
bool is_restricted_pair(const TerminalGraph& g);

/// (n+1)x(n+1) bordered matrix: A in the top-left block, 1 whenever
/// exactly one index is n+1, 0 at (n+1,n+1).
BoolMatrix build_a_prime(const BoolMatrix& a);

/// The 2(n+1)-vertex graph with adjacency [[0, A'], [A'^T, 0]].
/// Row-side vertices come first (0..n), column-side after (n+1..2n+1);
/// x is the row-side vertex n, y the column-side vertex 2n+1.
TerminalGraph build_a_double_prime(const BoolMatrix& a);

/// Certificate translations between covers/selections of A and
/// cuts/path collections of build_a_double_prime(A). A flagged row i
/// maps to the edge (y, u_i), a flagged column j to (x, v_j); a pick
/// (i,j) maps to the path x -> v_j -> u_i -> y. EdgeCut/PathCollection
/// construction validates the result.
EdgeCut cover_to_cut(const BoolMatrix& a, const Cover& alpha);
Cover cut_to_cover(const BoolMatrix& a, const EdgeCut& gamma);
PathCollection selection_to_paths(const BoolMatrix& a, const Selection& beta);
Selection paths_to_selection(const BoolMatrix& a, const PathCollection& paths);

/// Incidence of cut edges on collection paths. Signals (by throwing
/// construction_failure) a row with no 1s: some path avoids the cut
/// entirely, so the cut is not a cut.
PathsCutIncidence paths_cut_incidence(const TerminalGraph& g, const PathCollection& paths,
                                      const EdgeCut& cut);

/// Exchange cut edges lying on no collection path for shared edges of
/// the paths they block, until the incidence matrix has exactly one 1
/// per row and column. Sizes are preserved. Throws
/// construction_failure if no exchange applies or the pass cap (|E|)
/// is exhausted; callers are expected to hand in maximum paths and a
/// minimum cut over a restricted pair.
std::pair<PathCollection, EdgeCut> repair_beta_gamma(const TerminalGraph& g,
                                                     const PathCollection& paths,
                                                     const EdgeCut& cut);

} // namespace kmm

#endif
