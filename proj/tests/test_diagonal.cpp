#include <doctest.h>

#include "helpers.hpp"
#include "kmm/diagonal.hpp"
#include "kmm/oracle.hpp"

using namespace kmm;

TEST_CASE("has_diagonal_property basics") {
    CHECK(has_diagonal_property(BoolMatrix::identity(3)));
    CHECK(has_diagonal_property(BoolMatrix(4, 4)));
    CHECK_FALSE(has_diagonal_property(BoolMatrix::from_rows({{0, 1}, {1, 0}})));
    CHECK_THROWS_AS(has_diagonal_property(BoolMatrix(2, 3)), invalid_input);
}

TEST_CASE("diagonalize leaves already-diagonal inputs alone") {
    auto r = diagonalize(BoolMatrix::identity(3));
    CHECK(r.p.is_identity());
    CHECK(r.q.is_identity());
    CHECK(r.transformed == BoolMatrix::identity(3));
}

TEST_CASE("diagonalize pulls a lone 1 onto the diagonal with a column swap") {
    auto r = diagonalize(BoolMatrix::from_rows({{0, 1}, {0, 0}}));
    CHECK(r.transformed == BoolMatrix::from_rows({{1, 0}, {0, 0}}));
    CHECK(r.p.is_identity());
    CHECK(r.q == PermutationMatrix::transposition(2, 0, 1));
    CHECK(has_diagonal_property(r.transformed));
}

TEST_CASE("diagonalize: exhaustive over all 3x3 matrices") {
    for (std::uint64_t bits = 0; bits < (1u << 9); ++bits) {
        BoolMatrix a = test::nth_matrix(3, bits);
        auto r = diagonalize(a);
        CHECK(has_diagonal_property(r.transformed));
        CHECK(r.transformed == apply_permutations(a, r.p, r.q));
        CHECK(sum_entries(r.transformed) == sum_entries(a));
    }
}

TEST_CASE("diagonalize: random matrices keep the settled layers intact") {
    Rng rng(5);
    for (int t = 0; t < 2000; ++t) {
        index_t n = rng.below(9);
        BoolMatrix a = random_matrix(n, n, 0.05 + 0.9 * (rng.below(100) / 100.0), rng);
        auto r = diagonalize(a);
        CHECK(has_diagonal_property(r.transformed));
        CHECK(r.transformed == apply_permutations(a, r.p, r.q));
        CHECK(sum_entries(r.transformed) == sum_entries(a));
        // layer monotonicity: each layer is settled or empty
        for (index_t k = 0; k < n; ++k) {
            if (r.transformed.at(k, k)) continue;
            for (index_t j = k; j < n; ++j) {
                CHECK(r.transformed.at(k, j) == 0);
                CHECK(r.transformed.at(j, k) == 0);
            }
        }
    }
}

TEST_CASE("diagonal transform leaves the oracle cover/selection sizes unchanged") {
    Rng rng(17);
    for (int t = 0; t < 150; ++t) {
        index_t n = 1 + rng.below(5);
        BoolMatrix a = random_matrix(n, n, 0.5, rng);
        auto r = diagonalize(a);
        CHECK(oracle_min_cover(a).size() == oracle_min_cover(r.transformed).size());
        CHECK(oracle_max_selection(a).size() == oracle_max_selection(r.transformed).size());
    }
}
