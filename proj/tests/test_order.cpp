#include <doctest.h>

#include "helpers.hpp"
#include "kmm/oracle.hpp"
#include "kmm/solver.hpp"

using namespace kmm;

TEST_CASE("union_property basics") {
    CHECK(union_property(SetSystem(BoolMatrix::identity(3))));
    CHECK_FALSE(union_property(SetSystem::from_sets(2, {{0}, {0}})));
    CHECK(union_property(SetSystem::from_sets(2, {{0, 1}, {0}})));
    CHECK(union_property_rows(BoolMatrix(0, 0)));  // no sets, vacuous
}

TEST_CASE("sdr_from_selection") {
    SolverOptions opts;
    SdrAssignment id = sdr_from_selection(SetSystem(BoolMatrix::identity(3)), opts);
    CHECK(id.assignment() == std::vector<index_t>{0, 1, 2});

    SdrAssignment nested = sdr_from_selection(SetSystem::from_sets(2, {{0, 1}, {0}}), opts);
    CHECK(nested.assignment() == std::vector<index_t>{1, 0});  // the unique SDR

    // permutation incidence: the SDR is the permutation itself
    BoolMatrix p(3, 3);
    p.set(0, 2, true);
    p.set(1, 0, true);
    p.set(2, 1, true);
    CHECK(sdr_from_selection(SetSystem(p), opts).assignment() ==
          std::vector<index_t>{2, 0, 1});

    CHECK_THROWS_AS(sdr_from_selection(SetSystem::from_sets(2, {{0}, {0}}), opts),
                    invalid_input);
}

TEST_CASE("hall equivalence on random 5x5 systems") {
    Rng rng(3);
    SolverOptions opts;
    for (int t = 0; t < 300; ++t) {
        SetSystem s = random_set_system(5, 0.1 + 0.8 * (rng.below(100) / 100.0), rng);
        auto r = oracle_hall(s);
        CHECK(r.union_prop == r.sdr.has_value());
        if (r.union_prop) {
            SdrAssignment a = sdr_from_selection(s, opts);
            CHECK(a.assignment().size() == 5);  // construction validates membership
        }
    }
}

TEST_CASE("hall_block_decomposition") {
    SolverOptions opts;

    // all-rows cover of the full matrix: e = n, f = 0
    BoolMatrix ones = BoolMatrix::from_rows({{1, 1}, {1, 1}});
    HallBlocks hb = hall_block_decomposition(ones, Cover({1, 1}, {0, 0}), opts);
    CHECK(hb.e == 2);
    CHECK(hb.f == 0);
    CHECK(hb.a2 == ones);
    CHECK(hb.a4.rows() == 0);

    BoolMatrix a = BoolMatrix::from_rows({{1, 1}, {1, 0}});
    HallBlocks hb2 = hall_block_decomposition(a, Cover({1, 0}, {1, 0}), opts);
    CHECK(hb2.e == 1);
    CHECK(hb2.f == 1);
    CHECK(hb2.a4 == BoolMatrix::from_rows({{0}}));
    CHECK(hb2.a1 == BoolMatrix::from_rows({{1}}));

    // non-minimal covers are rejected
    BoolMatrix lone(2, 2);
    lone.set(0, 0, true);
    CHECK_THROWS_AS(hall_block_decomposition(lone, Cover({1, 1}, {0, 0}), opts),
                    invalid_input);
    CHECK_THROWS_AS(hall_block_decomposition(lone, Cover({0, 1}, {0, 0}), opts),
                    invalid_input);  // not even a cover
}

TEST_CASE("blocks of a minimal cover satisfy the union property") {
    Rng rng(19);
    SolverOptions opts;
    for (int t = 0; t < 250; ++t) {
        index_t n = 1 + rng.below(5);
        BoolMatrix a = random_matrix(n, n, 0.15 + 0.7 * (rng.below(100) / 100.0), rng);
        Cover c = oracle_min_cover(a);
        HallBlocks hb = hall_block_decomposition(a, c, opts);
        CHECK(sum_entries(hb.a4) == 0);
        CHECK(union_property_of_blocks(hb.a2, hb.a3));
        // selections in disjoint blocks on disjoint lines combine
        BoolMatrix a2sq = hb.a2.padded_to(n, n);
        BoolMatrix a3sq = hb.a3.padded_to(n, n);
        CHECK(oracle_max_selection(a).size() >=
              oracle_max_selection(a2sq).size() + oracle_max_selection(a3sq).size());
    }
}

TEST_CASE("union property of blocks can fail for sloppy covers") {
    // Take A = [[1,0],[0,0]] with the non-minimal cover {row1, row2}:
    // row 2 is an empty set, so the union property fails. The
    // decomposition op refuses non-minimal covers, so probe the check
    // directly on the would-be A2 block.
    BoolMatrix a2 = BoolMatrix::from_rows({{1, 0}, {0, 0}});
    CHECK_FALSE(union_property_rows(a2));
}

TEST_CASE("chains_element_incidence") {
    // three singleton chains over an antichain
    Poset anti(BoolMatrix(3, 3));
    ChainPartition singletons(anti, {{0}, {1}, {2}});
    CHECK(chains_element_incidence(anti, singletons) == BoolMatrix::identity(3));

    // a single full chain: one all-ones row
    BoolMatrix total(3, 3);
    total.set(0, 1, true);
    total.set(0, 2, true);
    total.set(1, 2, true);
    Poset chain(total);
    ChainPartition one(chain, {{0, 1, 2}});
    CHECK(chains_element_incidence(chain, one) == BoolMatrix::from_rows({{1, 1, 1}}));

    CHECK_THROWS_AS(ChainPartition(anti, {{0, 1}, {2}}), invalid_input);  // incomparable pair
    CHECK_THROWS_AS(ChainPartition(anti, {{0}, {0}, {1}, {2}}), invalid_input);
}

TEST_CASE("the solver reproduces the chain count on the incidence matrix") {
    Rng rng(29);
    SolverOptions opts;
    for (int t = 0; t < 150; ++t) {
        index_t n = 1 + rng.below(6);
        Poset p = random_poset(n, 0.2 + 0.5 * (rng.below(100) / 100.0), rng);
        auto dr = oracle_dilworth(p);
        BoolMatrix inc = chains_element_incidence(p, dr.chains).padded_to(n, n);
        auto rep = kmm_check(inc, opts);
        CHECK(rep.o == dr.kappa);
        CHECK(rep.l == dr.kappa);
        CHECK(dr.lambda == dr.kappa);
    }
}

TEST_CASE("antichain_from_selection accepts antichain-inducing picks") {
    Poset anti(BoolMatrix(3, 3));
    ChainPartition singletons(anti, {{0}, {1}, {2}});
    Selection all(3, {{0, 0}, {1, 1}, {2, 2}});
    CHECK(antichain_from_selection(anti, singletons, all).size() == 3);

    BoolMatrix total(2, 2);
    total.set(0, 1, true);
    Poset chain(total);
    ChainPartition one(chain, {{0, 1}});
    Selection single(2, {{0, 0}});
    CHECK(antichain_from_selection(chain, one, single).size() == 1);
}

TEST_CASE("antichain_from_selection rejects comparable picks with a clear error") {
    // poset 0 < 1, 0 < 2; minimum chains {{0,1},{2}}; picking element 0
    // from the first chain and 2 from the second is a maximum selection
    // of the incidence matrix, yet 0 < 2
    BoolMatrix lt(3, 3);
    lt.set(0, 1, true);
    lt.set(0, 2, true);
    Poset p(lt);
    ChainPartition chains(p, {{0, 1}, {2}});
    Selection picks(3, {{0, 0}, {1, 2}});
    CHECK_THROWS_AS(antichain_from_selection(p, chains, picks), construction_failure);

    // the antichain witness of the exhaustive search always passes
    auto dr = oracle_dilworth(p);
    CHECK(dr.lambda == 2);
}

TEST_CASE("oracle antichains induce valid selections of the incidence matrix") {
    Rng rng(37);
    for (int t = 0; t < 200; ++t) {
        index_t n = 1 + rng.below(6);
        Poset p = random_poset(n, 0.2 + 0.5 * (rng.below(100) / 100.0), rng);
        auto dr = oracle_dilworth(p);
        // map each antichain element to its chain: one pick per chain
        std::vector<std::pair<index_t, index_t>> picks;
        for (index_t e : dr.antichain.elements()) {
            for (index_t c = 0; c < dr.chains.size(); ++c) {
                const auto& chain = dr.chains.chains()[c];
                if (std::find(chain.begin(), chain.end(), e) != chain.end())
                    picks.emplace_back(c, e);
            }
        }
        Selection beta(n, picks);
        AntiChain ac = antichain_from_selection(p, dr.chains, beta);
        CHECK(ac.size() == dr.kappa);
    }
}

TEST_CASE("poset_from_set_system") {
    // zero incidence: 2n isolated elements
    auto empty = poset_from_set_system(SetSystem(BoolMatrix(3, 3)));
    CHECK(oracle_dilworth(empty).lambda == 6);

    auto ident = poset_from_set_system(SetSystem(BoolMatrix::identity(2)));
    auto dr = oracle_dilworth(ident);
    CHECK(dr.lambda == 2);
    CHECK(dr.kappa == 2);

    Rng rng(41);
    for (int t = 0; t < 100; ++t) {
        index_t n = 1 + rng.below(4);
        SetSystem s = random_set_system(n, 0.5, rng);
        Poset p = poset_from_set_system(s);  // constructor validates the order axioms
        // the x side is always an antichain of size n
        for (index_t i = 0; i < n; ++i)
            for (index_t j = 0; j < n; ++j) {
                bool related = i != j && p.comparable(i, j);
                CHECK_FALSE(related);
            }
        CHECK(oracle_dilworth(p).lambda >= n);
    }
}

TEST_CASE("sdr_from_chain_partition") {
    // identity: chains {x_i, S_i}, representative i for set i
    SetSystem ident(BoolMatrix::identity(3));
    Poset p = poset_from_set_system(ident);
    ChainPartition chains(p, {{0, 3}, {1, 4}, {2, 5}});
    CHECK(sdr_from_chain_partition(ident, chains).assignment() ==
          std::vector<index_t>{0, 1, 2});

    // cyclic singletons: S_1={2}, S_2={3}, S_3={1} pin the orientation
    SetSystem cyc = SetSystem::from_sets(3, {{1}, {2}, {0}});
    Poset pc = poset_from_set_system(cyc);
    auto drc = oracle_dilworth(pc);
    REQUIRE(drc.kappa == 3);
    SdrAssignment sdr = sdr_from_chain_partition(cyc, drc.chains);
    CHECK(sdr.assignment() == std::vector<index_t>{1, 2, 0});

    // a partition with a chain that is not an {x, S} pair is rejected
    SetSystem nested = SetSystem::from_sets(2, {{0, 1}, {0}});
    Poset pn = poset_from_set_system(nested);
    auto drn = oracle_dilworth(pn);
    REQUIRE(drn.kappa == 2);
    SdrAssignment sn = sdr_from_chain_partition(nested, drn.chains);
    CHECK(sn.assignment().size() == 2);  // validity is checked by the constructor

    // Hall-negative systems need more than n chains
    SetSystem clash = SetSystem::from_sets(2, {{0}, {0}});
    auto drx = oracle_dilworth(poset_from_set_system(clash));
    CHECK(drx.kappa > 2);
    CHECK_THROWS_AS(sdr_from_chain_partition(clash, drx.chains), invalid_input);
}
