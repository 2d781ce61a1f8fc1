#include "kmm/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace kmm {

TerminalGraph::TerminalGraph(BoolMatrix adjacency, index_t x, index_t y)
    : adj_(std::move(adjacency)), x_(x), y_(y) {
    if (!adj_.square()) throw invalid_input("TerminalGraph: adjacency must be square");
    const index_t n = adj_.rows();
    if (x_ >= n || y_ >= n || x_ == y_)
        throw invalid_input("TerminalGraph: terminals out of range or equal");
    for (index_t i = 0; i < n; ++i) {
        if (adj_.at(i, i)) throw invalid_input("TerminalGraph: nonzero diagonal");
        for (index_t j = i + 1; j < n; ++j)
            if (adj_.at(i, j) != adj_.at(j, i))
                throw invalid_input("TerminalGraph: adjacency not symmetric");
    }
    if (adj_.at(x_, y_)) throw invalid_input("TerminalGraph: (x,y) must be a non-edge");
}

std::vector<Edge> TerminalGraph::edges() const {
    std::vector<Edge> es;
    for (index_t i = 0; i < n(); ++i)
        for (index_t j = i + 1; j < n(); ++j)
            if (adj_.at(i, j)) es.emplace_back(i, j);
    return es;
}

bool is_path(const TerminalGraph& g, const VertexSeq& seq) {
    if (seq.size() < 2) return false;
    if (seq.front() != g.x() || seq.back() != g.y()) return false;
    std::set<index_t> seen;
    for (index_t v : seq) {
        if (v >= g.n() || !seen.insert(v).second) return false;
    }
    for (index_t i = 0; i + 1 < seq.size(); ++i)
        if (!g.has_edge(seq[i], seq[i + 1])) return false;
    return true;
}

std::vector<VertexSeq> enumerate_simple_paths(const TerminalGraph& g) {
    std::vector<VertexSeq> out;
    std::vector<std::uint8_t> visited(g.n(), 0);
    VertexSeq cur{g.x()};
    visited[g.x()] = 1;
    auto dfs = [&](auto&& self, index_t v) -> void {
        if (v == g.y()) {
            out.push_back(cur);
            return;
        }
        for (index_t w = 0; w < g.n(); ++w) {
            if (!g.has_edge(v, w) || visited[w]) continue;
            visited[w] = 1;
            cur.push_back(w);
            self(self, w);
            cur.pop_back();
            visited[w] = 0;
        }
    };
    dfs(dfs, g.x());
    return out;
}

bool separates(const TerminalGraph& g, const std::vector<Edge>& removed) {
    BoolMatrix adj = g.adjacency();
    for (const Edge& e : removed) {
        adj.set(e.first, e.second, false);
        adj.set(e.second, e.first, false);
    }
    std::vector<std::uint8_t> seen(g.n(), 0);
    std::vector<index_t> stack{g.x()};
    seen[g.x()] = 1;
    while (!stack.empty()) {
        index_t v = stack.back();
        stack.pop_back();
        if (v == g.y()) return false;
        for (index_t w = 0; w < g.n(); ++w)
            if (adj.at(v, w) && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return true;
}

PathCollection::PathCollection(const TerminalGraph& g, std::vector<VertexSeq> paths)
    : paths_(std::move(paths)) {
    std::set<index_t> internals;
    for (const auto& p : paths_) {
        if (!is_path(g, p)) throw invalid_input("PathCollection: sequence is not an x,y-path");
        for (index_t i = 1; i + 1 < p.size(); ++i)
            if (!internals.insert(p[i]).second)
                throw invalid_input("PathCollection: paths share an internal vertex");
    }
}

EdgeCut::EdgeCut(const TerminalGraph& g, std::vector<Edge> edges) : edges_(std::move(edges)) {
    for (Edge& e : edges_) e = make_edge(e.first, e.second);
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const Edge& e : edges_)
        if (!g.has_edge(e.first, e.second))
            throw invalid_input("EdgeCut: edge not present in the graph");
    if (!separates(g, edges_))
        throw construction_failure("EdgeCut: removal leaves an x,y-path");
}

bool EdgeCut::contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(e.first, e.second));
}

BoolMatrix encode_path_matrix(const TerminalGraph& g, const VertexSeq& seq) {
    if (!is_path(g, seq)) throw invalid_input("encode_path_matrix: not an x,y-path");
    const index_t n = g.n();
    if (n < 3 || seq.size() < 3)
        throw invalid_input("encode_path_matrix: no internal vertices to encode");

    // Columns index the non-terminal vertices in ascending order.
    std::vector<index_t> col_of(n, n);
    index_t next = 0;
    for (index_t v = 0; v < n; ++v)
        if (v != g.x() && v != g.y()) col_of[v] = next++;

    const index_t side = n - 2;
    BoolMatrix enc(side, side);
    const index_t k = seq.size() - 2;
    for (index_t l = 0; l < side; ++l) {
        index_t v = seq[std::min(l, k - 1) + 1];  // repeat the last internal row
        enc.set(l, col_of[v], true);
    }
    return enc;
}

std::optional<VertexSeq> decode_path_matrix(const TerminalGraph& g, const BoolMatrix& enc) {
    const index_t n = g.n();
    if (n < 3) return std::nullopt;
    if (enc.rows() != n - 2 || enc.cols() != n - 2) return std::nullopt;

    std::vector<index_t> vertex_of;
    for (index_t v = 0; v < n; ++v)
        if (v != g.x() && v != g.y()) vertex_of.push_back(v);

    std::vector<index_t> marked(n - 2);
    for (index_t l = 0; l < n - 2; ++l) {
        index_t ones = 0, col = 0;
        for (index_t c = 0; c < n - 2; ++c)
            if (enc.at(l, c)) {
                ++ones;
                col = c;
            }
        if (ones != 1) return std::nullopt;
        marked[l] = col;
    }
    // Real prefix, then constant padding copying the last real row.
    index_t k = 1;
    while (k < n - 2 && marked[k] != marked[k - 1]) ++k;
    for (index_t l = k; l < n - 2; ++l)
        if (marked[l] != marked[k - 1]) return std::nullopt;

    VertexSeq seq{g.x()};
    for (index_t l = 0; l < k; ++l) seq.push_back(vertex_of[marked[l]]);
    seq.push_back(g.y());
    if (!is_path(g, seq)) return std::nullopt;
    return seq;
}

bool is_restricted_pair(const TerminalGraph& g) {
    const auto edges = g.edges();
    if (edges.size() > 64)
        throw budget_exceeded("is_restricted_pair: more than 64 edges to mask");
    const auto paths = enumerate_simple_paths(g);

    auto edge_id = [&](const Edge& e) {
        return static_cast<index_t>(
            std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
    };
    std::vector<std::uint64_t> masks(paths.size(), 0);
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (index_t l = 0; l + 1 < paths[i].size(); ++l)
            masks[i] |= std::uint64_t{1} << edge_id(make_edge(paths[i][l], paths[i][l + 1]));

    for (std::size_t i = 0; i < paths.size(); ++i) {
        index_t sharers = 0;
        for (std::size_t j = 0; j < paths.size(); ++j) {
            if (i == j || !(masks[i] & masks[j])) continue;
            if (++sharers > 1) return false;
        }
    }
    return true;
}

BoolMatrix build_a_prime(const BoolMatrix& a) {
    if (!a.square()) throw invalid_input("build_a_prime: non-square matrix");
    const index_t n = a.rows();
    BoolMatrix ap(n + 1, n + 1);
    for (index_t i = 0; i < n; ++i)
        for (index_t j = 0; j < n; ++j) ap.set(i, j, a.at(i, j));
    for (index_t i = 0; i < n; ++i) {
        ap.set(i, n, true);
        ap.set(n, i, true);
    }
    return ap;
}

TerminalGraph build_a_double_prime(const BoolMatrix& a) {
    const BoolMatrix ap = build_a_prime(a);
    const index_t m = ap.rows();  // n + 1
    BoolMatrix adj(2 * m, 2 * m);
    for (index_t i = 0; i < m; ++i)
        for (index_t j = 0; j < m; ++j)
            if (ap.at(i, j)) {
                adj.set(i, m + j, true);
                adj.set(m + j, i, true);
            }
    // x: row-side extra vertex; y: column-side extra vertex.
    return TerminalGraph(std::move(adj), m - 1, 2 * m - 1);
}

namespace {

struct DoublePrimeIds {
    index_t n;  // side of the original matrix
    index_t u(index_t i) const { return i; }
    index_t v(index_t j) const { return n + 1 + j; }
    index_t x() const { return n; }
    index_t y() const { return 2 * n + 1; }
};

} // namespace

EdgeCut cover_to_cut(const BoolMatrix& a, const Cover& alpha) {
    if (!is_cover(a, alpha)) throw invalid_input("cover_to_cut: alpha is not a cover of A");
    const DoublePrimeIds id{a.rows()};
    TerminalGraph g = build_a_double_prime(a);
    std::vector<Edge> edges;
    for (index_t i = 0; i < a.rows(); ++i)
        if (alpha.row(i)) edges.push_back(make_edge(id.y(), id.u(i)));
    for (index_t j = 0; j < a.cols(); ++j)
        if (alpha.col(j)) edges.push_back(make_edge(id.x(), id.v(j)));
    return EdgeCut(g, std::move(edges));  // validates; may legitimately fail
}

Cover cut_to_cover(const BoolMatrix& a, const EdgeCut& gamma) {
    const index_t n = a.rows();
    const DoublePrimeIds id{n};
    TerminalGraph g = build_a_double_prime(a);
    for (const Edge& e : gamma.edges())
        if (!g.has_edge(e.first, e.second))
            throw invalid_input("cut_to_cover: edge not in A''");
    if (!separates(g, gamma.edges()))
        throw invalid_input("cut_to_cover: gamma is not an x,y-cut of A''");

    std::vector<std::uint8_t> rows(n, 0), cols(n, 0);
    for (const Edge& e : gamma.edges()) {
        // Edges at y flag rows, edges at x flag columns; an interior
        // matrix edge (u_i, v_j) is absorbed into its row line.
        if (e.second == id.y())
            rows[e.first] = 1;
        else if (e.first == id.x())
            cols[e.second - (n + 1)] = 1;
        else
            rows[e.first] = 1;
    }
    Cover c(std::move(rows), std::move(cols));
    if (!is_cover(a, c)) throw std::logic_error("internal: cut_to_cover produced a non-cover");
    return c;
}

PathCollection selection_to_paths(const BoolMatrix& a, const Selection& beta) {
    if (!is_selection(a, beta))
        throw invalid_input("selection_to_paths: beta is not a selection of A");
    const DoublePrimeIds id{a.rows()};
    TerminalGraph g = build_a_double_prime(a);
    std::vector<VertexSeq> paths;
    for (auto [i, j] : beta.picks()) paths.push_back({id.x(), id.v(j), id.u(i), id.y()});
    return PathCollection(g, std::move(paths));
}

Selection paths_to_selection(const BoolMatrix& a, const PathCollection& paths) {
    const index_t n = a.rows();
    std::vector<std::pair<index_t, index_t>> picks;
    for (const auto& p : paths.paths()) {
        if (p.size() < 4) throw invalid_input("paths_to_selection: path too short for A''");
        // First hop lands on a column-side vertex, second on a row-side one.
        index_t vj = p[1], ui = p[2];
        if (vj < n + 1 || vj > 2 * n)
            throw invalid_input("paths_to_selection: unexpected first internal vertex");
        if (ui >= n) throw invalid_input("paths_to_selection: unexpected second internal vertex");
        picks.emplace_back(ui, vj - (n + 1));
    }
    Selection s(n, std::move(picks));
    if (!is_selection(a, s))
        throw invalid_input("paths_to_selection: picks land outside the 1s of A");
    return s;
}

PathsCutIncidence paths_cut_incidence(const TerminalGraph& g, const PathCollection& paths,
                                      const EdgeCut& cut) {
    (void)g;
    PathsCutIncidence inc;
    inc.col_labels = cut.edges();
    inc.matrix = BoolMatrix(paths.size(), cut.size());
    for (index_t i = 0; i < paths.size(); ++i) {
        inc.row_labels.push_back(i);
        const auto& p = paths.paths()[i];
        index_t ones = 0;
        for (index_t l = 0; l + 1 < p.size(); ++l) {
            Edge e = make_edge(p[l], p[l + 1]);
            auto it = std::find(inc.col_labels.begin(), inc.col_labels.end(), e);
            if (it != inc.col_labels.end()) {
                inc.matrix.set(i, static_cast<index_t>(it - inc.col_labels.begin()), true);
                ++ones;
            }
        }
        if (ones == 0)
            throw construction_failure(
                "paths_cut_incidence: path " + std::to_string(i) + " avoids the cut entirely");
    }
    for (index_t j = 0; j < cut.size(); ++j) {
        index_t ones = 0;
        for (index_t i = 0; i < paths.size(); ++i) ones += inc.matrix.at(i, j);
        if (ones > 1)
            throw std::logic_error("internal: disjoint paths share a cut edge");
    }
    return inc;
}

std::pair<PathCollection, EdgeCut> repair_beta_gamma(const TerminalGraph& g,
                                                     const PathCollection& paths,
                                                     const EdgeCut& cut) {
    const auto all = enumerate_simple_paths(g);
    std::vector<std::set<Edge>> all_edge_sets(all.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        for (index_t l = 0; l + 1 < all[i].size(); ++l)
            all_edge_sets[i].insert(make_edge(all[i][l], all[i][l + 1]));

    std::vector<std::set<Edge>> beta_edge_sets(paths.size());
    for (index_t i = 0; i < paths.size(); ++i)
        for (index_t l = 0; l + 1 < paths.paths()[i].size(); ++l)
            beta_edge_sets[i].insert(
                make_edge(paths.paths()[i][l], paths.paths()[i][l + 1]));

    std::set<Edge> gamma(cut.edges().begin(), cut.edges().end());
    const index_t pass_cap = g.edges().size();

    for (index_t pass = 0; pass <= pass_cap; ++pass) {
        // A cut edge carried by no collection path.
        std::optional<Edge> loose;
        for (const Edge& e : gamma) {
            bool on_path = std::any_of(beta_edge_sets.begin(), beta_edge_sets.end(),
                                       [&](const std::set<Edge>& s) { return s.count(e) > 0; });
            if (!on_path) {
                loose = e;
                break;
            }
        }
        if (!loose) {
            std::vector<Edge> final_edges(gamma.begin(), gamma.end());
            EdgeCut repaired(g, std::move(final_edges));
            PathsCutIncidence inc = paths_cut_incidence(g, paths, repaired);
            for (index_t i = 0; i < inc.matrix.rows(); ++i) {
                index_t ones = 0;
                for (index_t j = 0; j < inc.matrix.cols(); ++j) ones += inc.matrix.at(i, j);
                if (ones != 1)
                    throw construction_failure(
                        "repair_beta_gamma: a path still meets the cut more than once");
            }
            if (inc.matrix.rows() != inc.matrix.cols())
                throw construction_failure(
                    "repair_beta_gamma: path and cut sizes differ, no perfect incidence");
            return {paths, repaired};
        }
        if (pass == pass_cap) break;

        // The loose edge must be what blocks some path rho outside the
        // collection; otherwise the cut was not minimum.
        int rho = -1;
        for (std::size_t i = 0; i < all.size(); ++i) {
            index_t hits = 0;
            for (const Edge& e : all_edge_sets[i])
                if (gamma.count(e)) ++hits;
            if (hits == 1 && all_edge_sets[i].count(*loose)) {
                rho = static_cast<int>(i);
                break;
            }
        }
        if (rho < 0)
            throw construction_failure(
                "repair_beta_gamma: loose cut edge blocks nothing (cut not minimum?)");

        // rho shares an edge e' with a collection path; exchange.
        std::optional<Edge> swap_in;
        for (index_t l = 0; l + 1 < all[rho].size() && !swap_in; ++l) {
            Edge e = make_edge(all[rho][l], all[rho][l + 1]);
            if (gamma.count(e)) continue;
            for (const auto& bset : beta_edge_sets)
                if (bset.count(e)) {
                    swap_in = e;
                    break;
                }
        }
        if (!swap_in)
            throw construction_failure(
                "repair_beta_gamma: blocked path shares no edge with the collection");
        gamma.erase(*loose);
        gamma.insert(*swap_in);
        std::vector<Edge> probe(gamma.begin(), gamma.end());
        if (!separates(g, probe))
            throw construction_failure("repair_beta_gamma: exchange broke the cut");
    }
    throw construction_failure("repair_beta_gamma: exchange cap exhausted");
}

} // namespace kmm
