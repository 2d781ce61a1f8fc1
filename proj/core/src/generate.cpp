#include "kmm/generate.hpp"

#include <cmath>

namespace kmm {

std::uint64_t Rng::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

bool Rng::bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    auto threshold = static_cast<std::uint64_t>(std::llround(p * 4294967296.0));
    return (next() >> 32) < threshold;
}

std::uint64_t Rng::below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

BoolMatrix random_matrix(index_t rows, index_t cols, double density, Rng& rng) {
    BoolMatrix m(rows, cols);
    for (index_t r = 0; r < rows; ++r)
        for (index_t c = 0; c < cols; ++c) m.set(r, c, rng.bernoulli(density));
    return m;
}

TerminalGraph random_graph(index_t n, double density, Rng& rng) {
    if (n < 2) throw invalid_input("random_graph: need at least the two terminals");
    BoolMatrix adj(n, n);
    for (index_t i = 0; i < n; ++i)
        for (index_t j = i + 1; j < n; ++j) {
            bool edge = rng.bernoulli(density);
            adj.set(i, j, edge);
            adj.set(j, i, edge);
        }
    adj.set(0, n - 1, false);
    adj.set(n - 1, 0, false);
    return TerminalGraph(std::move(adj), 0, n - 1);
}

SetSystem random_set_system(index_t n, double density, Rng& rng) {
    return SetSystem(random_matrix(n, n, density, rng));
}

Poset random_poset(index_t n, double density, Rng& rng) {
    BoolMatrix lt(n, n);
    for (index_t i = 0; i < n; ++i)
        for (index_t j = i + 1; j < n; ++j) lt.set(i, j, rng.bernoulli(density));
    // transitive closure (the relation is acyclic by the i < j orientation)
    for (index_t k = 0; k < n; ++k)
        for (index_t i = 0; i < n; ++i)
            for (index_t j = 0; j < n; ++j)
                if (lt.at(i, k) && lt.at(k, j)) lt.set(i, j, true);
    return Poset(std::move(lt));
}

} // namespace kmm
