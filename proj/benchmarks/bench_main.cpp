#include <random>

#include <benchmark/benchmark.h>

#include "poisson/catalog.hpp"
#include "poisson/cohomology.hpp"
#include "poisson/deformation.hpp"

using namespace poisson;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-6, 6);
    return Rational(num(rng), 1 + (rng() % 3));
}

MultilinearMap random_cochain(std::mt19937_64& rng, std::size_t arity, std::size_t dim) {
    MultilinearMap m(arity, dim);
    Vec coeffs(m.coefficients().size());
    for (auto& c : coeffs) c = random_rational(rng);
    return MultilinearMap::from_coefficients(arity, dim, std::move(coeffs));
}

PoissonPair sl2_pair() {
    CatalogParams p;
    p.bracket = named_bracket("sl2");
    return instantiate("P_12^3", p);
}

void BM_kernel_basis(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(17);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_rational(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernel_basis(m));
    }
}
BENCHMARK(BM_kernel_basis)->Arg(16)->Arg(64);

void BM_delta2_P(benchmark::State& state) {
    Algebra a = combine(sl2_pair());
    std::mt19937_64 rng(19);
    MultilinearMap phi = random_cochain(rng, 2, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(delta2_P(a, phi));
    }
}
BENCHMARK(BM_delta2_P);

void BM_decompose_delta2(benchmark::State& state) {
    Algebra a = combine(sl2_pair());
    std::mt19937_64 rng(23);
    MultilinearMap phi = random_cochain(rng, 2, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose_delta2(a, phi));
    }
}
BENCHMARK(BM_decompose_delta2);

void BM_cocycle_space_P2(benchmark::State& state) {
    Algebra a = combine(sl2_pair());
    for (auto _ : state) {
        benchmark::DoNotOptimize(cocycle_space(a, OperatorKind::P2));
    }
}
BENCHMARK(BM_cocycle_space_P2);

void BM_verify_catalog(benchmark::State& state) {
    PoissonPair p = sl2_pair();
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify(p));
    }
}
BENCHMARK(BM_verify_catalog);

void BM_rigidity_probe(benchmark::State& state) {
    PoissonPair p = sl2_pair();
    for (auto _ : state) {
        benchmark::DoNotOptimize(rigidity_probe(p));
    }
}
BENCHMARK(BM_rigidity_probe);

} // namespace

BENCHMARK_MAIN();
