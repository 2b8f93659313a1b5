#include <benchmark/benchmark.h>

#include "qplex/homology.hpp"

using namespace qplex;

namespace {

QComplex uniform_2_3_4() { return QComplex::uniform(Field::prime_field(2), 4, 3); }

void BM_FieldMulTable(benchmark::State& state) {
    auto f16 = Field::parse("gf(2^4):x^4+x+1");
    uint32_t acc = 1;
    for (auto _ : state) {
        for (uint32_t a = 1; a < 16; ++a)
            for (uint32_t b = 1; b < 16; ++b) acc ^= f16->mul(a, b);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_FieldMulTable);

void BM_GrassmannianEnum(benchmark::State& state) {
    auto f2 = Field::prime_field(2);
    for (auto _ : state) {
        auto spaces = enumerate_grassmannian(f2, size_t(state.range(0)), size_t(state.range(0) / 2));
        benchmark::DoNotOptimize(spaces);
    }
}
BENCHMARK(BM_GrassmannianEnum)->Arg(4)->Arg(6);

void BM_CmpQSortFacets(benchmark::State& state) {
    auto facets = QComplex::uniform(Field::prime_field(2), 4, 2).facets();
    for (auto _ : state) {
        auto sorted = sorted_by_cmp_q(facets);
        benchmark::DoNotOptimize(sorted);
    }
}
BENCHMARK(BM_CmpQSortFacets);

void BM_OrderComplex(benchmark::State& state) {
    QComplex c = uniform_2_3_4();
    for (auto _ : state) {
        SimplicialComplex k = order_complex(c, true);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_OrderComplex);

void BM_ChainSort(benchmark::State& state) {
    QComplex c = uniform_2_3_4();
    for (auto _ : state) {
        auto chains = maximal_chains_sorted(c);
        benchmark::DoNotOptimize(chains);
    }
}
BENCHMARK(BM_ChainSort);

void BM_SmithNormalForm(benchmark::State& state) {
    QComplex c = uniform_2_3_4();
    auto boundaries = boundary_matrices(order_complex(c, true), true);
    const IntMatrix& top = boundaries.back().m;
    for (auto _ : state) {
        SnfResult r = smith_normal_form(top);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_SmithNormalForm);

void BM_ReducedHomology(benchmark::State& state) {
    QComplex c = uniform_2_3_4();
    for (auto _ : state) {
        HomologyReport rep = reduced_homology(order_complex(c, true));
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_ReducedHomology);

void BM_BettiFormula(benchmark::State& state) {
    QComplex c = QComplex::uniform(Field::prime_field(2), 4, 2);
    for (auto _ : state) {
        BettiBreakdown b = betti_formula(c);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_BettiFormula);

void BM_RestrictionOracle(benchmark::State& state) {
    QComplex c = QComplex::q_sphere(Subspace::full(Field::prime_field(2), 3));
    for (auto _ : state) {
        int64_t n = count_homology_facets_oracle(c);
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_RestrictionOracle);

} // namespace

BENCHMARK_MAIN();
