#include <benchmark/benchmark.h>

#include "ordlen/length.hpp"
#include "ordlen/monomial.hpp"
#include "ordlen/ordinal.hpp"
#include "ordlen/poset.hpp"

#include <random>
#include <vector>

using namespace ordlen;

namespace {

const std::vector<std::string> XYZ = {"x", "y", "z"};

const char* RUNNING_IDEAL =
    "x^5*y*z, x^4*y^3*z, x^3*y^2*z^2, x^2*y^3*z^2, x^2*y^2*z^3, "
    "x^4*y*z^4, x^6*z^4, x^5*z^5";

std::vector<Ordinal> sample_ordinals(std::size_t count) {
    std::mt19937_64 rng(1234);
    std::vector<Ordinal> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<OrdinalTerm> terms;
        for (std::uint64_t e = 6; e-- > 0;)
            if (rng() % 2) terms.push_back({e, rng() % 5 + 1});
        out.push_back(Ordinal::from_terms(terms));
    }
    return out;
}

void bm_ord_sum(benchmark::State& state) {
    std::vector<Ordinal> pool = sample_ordinals(64);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ord_sum(pool[i % 64], pool[(i + 17) % 64]));
        ++i;
    }
}
BENCHMARK(bm_ord_sum);

void bm_shuffle_sum(benchmark::State& state) {
    std::vector<Ordinal> pool = sample_ordinals(64);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            shuffle_sum(pool[i % 64], pool[(i + 17) % 64]));
        ++i;
    }
}
BENCHMARK(bm_shuffle_sum);

void bm_shuffle_oracle(benchmark::State& state) {
    Ordinal a = parse_ordinal("2*w^3 + w + 1");
    Ordinal b = parse_ordinal("w^2 + 2*w");
    for (auto _ : state)
        benchmark::DoNotOptimize(shuffle_sum_oracle(a, b));
}
BENCHMARK(bm_shuffle_oracle);

void bm_poset_product_length(benchmark::State& state) {
    FinitePoset p = FinitePoset::chain(6);
    FinitePoset q = FinitePoset::antichain(3);
    FinitePoset r = product_order(sum_order(p, q), FinitePoset::chain(4));
    for (auto _ : state)
        benchmark::DoNotOptimize(poset_length(r));
}
BENCHMARK(bm_poset_product_length);

void bm_running_example_cycle(benchmark::State& state) {
    Subquotient m = Subquotient::ring(parse_ideal(RUNNING_IDEAL, XYZ));
    for (auto _ : state)
        benchmark::DoNotOptimize(fundamental_cycle(m));
}
BENCHMARK(bm_running_example_cycle);

void bm_running_example_standard_pairs(benchmark::State& state) {
    MonomialIdeal ideal = parse_ideal(RUNNING_IDEAL, XYZ);
    for (auto _ : state)
        benchmark::DoNotOptimize(standard_pairs(ideal));
}
BENCHMARK(bm_running_example_standard_pairs);

void bm_irreducible_decomposition(benchmark::State& state) {
    MonomialIdeal ideal = parse_ideal(RUNNING_IDEAL, XYZ);
    for (auto _ : state)
        benchmark::DoNotOptimize(irreducible_decomposition(ideal));
}
BENCHMARK(bm_irreducible_decomposition);

} // namespace

BENCHMARK_MAIN();
