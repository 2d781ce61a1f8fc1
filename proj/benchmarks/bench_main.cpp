#include <benchmark/benchmark.h>

#include "kmm/diagonal.hpp"
#include "kmm/generate.hpp"
#include "kmm/la/axioms.hpp"
#include "kmm/la/eval.hpp"
#include "kmm/la/parser.hpp"
#include "kmm/oracle.hpp"
#include "kmm/solver.hpp"

namespace {

using namespace kmm;

void BM_Solve(benchmark::State& state) {
    const auto n = static_cast<index_t>(state.range(0));
    Rng rng(99);
    std::vector<BoolMatrix> pool;
    for (int i = 0; i < 32; ++i) pool.push_back(random_matrix(n, n, 0.5, rng));
    std::size_t k = 0;
    for (auto _ : state) {
        auto rep = kmm_check(pool[k++ % pool.size()]);
        benchmark::DoNotOptimize(rep.l);
    }
}
BENCHMARK(BM_Solve)->DenseRange(4, 12, 2);

void BM_OracleMinCover(benchmark::State& state) {
    const auto n = static_cast<index_t>(state.range(0));
    Rng rng(7);
    std::vector<BoolMatrix> pool;
    for (int i = 0; i < 32; ++i) pool.push_back(random_matrix(n, n, 0.5, rng));
    std::size_t k = 0;
    for (auto _ : state) {
        auto c = oracle_min_cover(pool[k++ % pool.size()]);
        benchmark::DoNotOptimize(c.size());
    }
}
BENCHMARK(BM_OracleMinCover)->DenseRange(4, 10, 2);

void BM_Diagonalize(benchmark::State& state) {
    const auto n = static_cast<index_t>(state.range(0));
    Rng rng(3);
    BoolMatrix a = random_matrix(n, n, 0.3, rng);
    for (auto _ : state) {
        auto r = diagonalize(a);
        benchmark::DoNotOptimize(r.transformed);
    }
}
BENCHMARK(BM_Diagonalize)->DenseRange(4, 16, 4);

void BM_EvalCoverFormula(benchmark::State& state) {
    auto f = la::parse_formula(
        "forall i <= r(A) . forall j <= r(A) . "
        "e(A, i, j) = 1 -> e(Alpha, 1, i) = 1 or e(Alpha, 2, j) = 1");
    Rng rng(5);
    la::Environment env;
    env.set_matrix("A", la::IntMatrix::from_bool(random_matrix(3, 3, 0.5, rng)));
    env.set_matrix("Alpha", la::IntMatrix::from_bool(random_matrix(2, 3, 0.5, rng)));
    for (auto _ : state) {
        bool v = la::eval_formula(f, env);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_EvalCoverFormula);

void BM_Axioms(benchmark::State& state) {
    for (auto _ : state) {
        auto rep = la::check_axioms(10, 42);
        benchmark::DoNotOptimize(rep.all_ok());
    }
}
BENCHMARK(BM_Axioms);

} // namespace

BENCHMARK_MAIN();
