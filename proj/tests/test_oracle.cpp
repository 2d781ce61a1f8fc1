#include <doctest.h>

#include "helpers.hpp"
#include "kmm/oracle.hpp"

using namespace kmm;

TEST_CASE("oracle_min_cover on stock matrices") {
    CHECK(oracle_min_cover(BoolMatrix(3, 3)).size() == 0);
    for (index_t n = 1; n <= 4; ++n) {
        BoolMatrix ones(n, n);
        for (index_t i = 0; i < n; ++i)
            for (index_t j = 0; j < n; ++j) ones.set(i, j, true);
        CHECK(oracle_min_cover(ones).size() == n);
    }
    BoolMatrix a = BoolMatrix::from_rows({{1, 1}, {1, 0}});
    Cover c = oracle_min_cover(a);
    CHECK(c.size() == 2);
    CHECK(is_cover(a, c));
    CHECK(test::brute_min_cover_size(a) == 2);
}

TEST_CASE("oracle_max_selection on stock matrices") {
    CHECK(oracle_max_selection(BoolMatrix::identity(4)).size() == 4);
    BoolMatrix ones(3, 3);
    for (index_t i = 0; i < 3; ++i)
        for (index_t j = 0; j < 3; ++j) ones.set(i, j, true);
    CHECK(oracle_max_selection(ones).size() == 3);
    BoolMatrix a = BoolMatrix::from_rows({{1, 1}, {1, 0}});
    Selection s = oracle_max_selection(a);
    CHECK(s.size() == 2);
    CHECK(is_selection(a, s));
}

TEST_CASE("oracle budget is a hard error") {
    CHECK_THROWS_AS(oracle_min_cover(BoolMatrix(11, 11)), budget_exceeded);
    OracleBudget raised;
    raised.max_dimension = 12;
    CHECK(oracle_min_cover(BoolMatrix(11, 11), raised).size() == 0);
}

TEST_CASE("min-max equality and the one-sided bound, exhaustively for n <= 3") {
    for (index_t n = 0; n <= 3; ++n) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * n)); ++bits) {
            BoolMatrix a = test::nth_matrix(n, bits);
            index_t l = oracle_min_cover(a).size();
            index_t o = oracle_max_selection(a).size();
            CHECK(o <= l);
            CHECK(o == l);
            CHECK(l == test::brute_min_cover_size(a));
            CHECK(o == test::brute_max_selection_size(a));
        }
    }
}

TEST_CASE("oracle witnesses are deterministic") {
    Rng rng(3);
    BoolMatrix a = random_matrix(6, 6, 0.4, rng);
    CHECK(oracle_min_cover(a) == oracle_min_cover(a));
    CHECK(oracle_max_selection(a) == oracle_max_selection(a));

    TerminalGraph g = build_a_double_prime(random_matrix(3, 3, 0.5, rng));
    auto m1 = oracle_menger(g), m2 = oracle_menger(g);
    CHECK(m1.paths.paths() == m2.paths.paths());
    CHECK(m1.cut.edges() == m2.cut.edges());

    Poset p = random_poset(6, 0.4, rng);
    auto d1 = oracle_dilworth(p), d2 = oracle_dilworth(p);
    CHECK(d1.antichain.elements() == d2.antichain.elements());
    CHECK(d1.chains.chains() == d2.chains.chains());
}

TEST_CASE("oracle_menger on tiny graphs") {
    // no x,y-path at all
    BoolMatrix adj(3, 3);
    TerminalGraph disconnected(adj, 0, 2);
    auto r0 = oracle_menger(disconnected);
    CHECK(r0.lambda == 0);
    CHECK(r0.kappa == 0);

    // x - v - y
    BoolMatrix chain(3, 3);
    chain.set(0, 1, true);
    chain.set(1, 0, true);
    chain.set(1, 2, true);
    chain.set(2, 1, true);
    TerminalGraph path(chain, 0, 2);
    auto r1 = oracle_menger(path);
    CHECK(r1.lambda == 1);
    CHECK(r1.kappa == 1);
    CHECK(r1.paths.size() == 1);
    CHECK(r1.cut.size() == 1);

    // bordered double graph of the 2x2 identity: two disjoint routes
    auto g = build_a_double_prime(BoolMatrix::identity(2));
    auto r2 = oracle_menger(g);
    CHECK(r2.lambda == 2);
    CHECK(r2.kappa == 2);
}

TEST_CASE("oracle_menger witnesses satisfy their contracts") {
    Rng rng(9);
    for (int t = 0; t < 40; ++t) {
        BoolMatrix a = random_matrix(2, 2, 0.6, rng);
        TerminalGraph g = build_a_double_prime(a);
        auto r = oracle_menger(g);
        CHECK(r.paths.size() == r.lambda);
        CHECK(r.cut.size() == r.kappa);  // both validated on construction
        for (const auto& p : r.paths.paths()) CHECK(is_path(g, p));
    }
}

TEST_CASE("oracle_hall on stock systems") {
    auto identity = SetSystem(BoolMatrix::identity(3));
    auto r1 = oracle_hall(identity);
    CHECK(r1.union_prop);
    REQUIRE(r1.sdr.has_value());
    CHECK(r1.sdr->assignment() == std::vector<index_t>{0, 1, 2});

    auto clash = SetSystem::from_sets(2, {{0}, {0}});
    auto r2 = oracle_hall(clash);
    CHECK_FALSE(r2.union_prop);
    CHECK_FALSE(r2.sdr.has_value());

    auto nested = SetSystem::from_sets(2, {{0, 1}, {0}});
    auto r3 = oracle_hall(nested);
    CHECK(r3.union_prop);
    REQUIRE(r3.sdr.has_value());
    CHECK(r3.sdr->assignment() == std::vector<index_t>{1, 0});
}

TEST_CASE("hall: union property iff an SDR exists, exhaustively for 3x3") {
    for (std::uint64_t bits = 0; bits < (1u << 9); ++bits) {
        SetSystem s(test::nth_matrix(3, bits));
        auto r = oracle_hall(s);
        CHECK(r.union_prop == r.sdr.has_value());
    }
}

TEST_CASE("oracle_dilworth on stock posets") {
    BoolMatrix total(3, 3);
    total.set(0, 1, true);
    total.set(0, 2, true);
    total.set(1, 2, true);
    auto r1 = oracle_dilworth(Poset(total));
    CHECK(r1.lambda == 1);
    CHECK(r1.kappa == 1);

    auto r2 = oracle_dilworth(Poset(BoolMatrix(3, 3)));
    CHECK(r2.lambda == 3);
    CHECK(r2.kappa == 3);

    // the two-level poset built from the 2x2 identity system
    auto p = poset_from_set_system(SetSystem(BoolMatrix::identity(2)));
    auto r3 = oracle_dilworth(p);
    CHECK(r3.lambda == 2);
    CHECK(r3.kappa == 2);
}

TEST_CASE("oracle_dilworth: lambda equals kappa on random posets") {
    Rng rng(13);
    for (int t = 0; t < 200; ++t) {
        index_t n = rng.below(7);
        Poset p = random_poset(n, 0.3 + 0.4 * (rng.below(100) / 100.0), rng);
        auto r = oracle_dilworth(p);
        CHECK(r.lambda == r.kappa);
        CHECK(r.antichain.size() == r.lambda);
        CHECK(r.chains.size() == (n == 0 ? 0 : r.kappa));
    }
}
