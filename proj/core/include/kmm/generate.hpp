#ifndef KMM_GENERATE_HPP
#define KMM_GENERATE_HPP

#include "kmm/graph.hpp"
#include "kmm/matrix.hpp"
#include "kmm/order.hpp"

namespace kmm {

/// splitmix64; the stream is pinned by the algorithm, so equal seeds
/// give byte-identical instances on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// true with probability round(p * 2^32) / 2^32
    bool bernoulli(double p);
    /// uniform in [0, n)
    std::uint64_t below(std::uint64_t n);

private:
    std::uint64_t state_;
};

BoolMatrix random_matrix(index_t rows, index_t cols, double density, Rng& rng);

/// Random symmetric graph with terminals 1 and n (0-based: 0 and n-1);
/// the (x,y) slot is forced to a non-edge.
TerminalGraph random_graph(index_t n, double density, Rng& rng);

SetSystem random_set_system(index_t n, double density, Rng& rng);

/// Transitive closure of a random DAG oriented along the element order.
Poset random_poset(index_t n, double density, Rng& rng);

} // namespace kmm

#endif
