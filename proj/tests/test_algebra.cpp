#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "poisson/algebra.hpp"
#include "poisson/errors.hpp"

using namespace poisson;
using test_support::basis_vec;
using test_support::random_cochain;

namespace {

PoissonPair leibniz_breaker() {
    // bullet e1.e1 = e1; bracket {e1,e2} = e2 (dim 2). Fails Leibniz.
    MultilinearMap bu(2, 2), br(2, 2);
    bu.coeff({0, 0}, 0) = Rational(1);
    br.coeff({0, 1}, 1) = Rational(1);
    br.coeff({1, 0}, 1) = Rational(-1);
    return PoissonPair(bu, br);
}

} // namespace

TEST_CASE("combine on the rigid example reproduces the product table") {
    Algebra a = combine(test_support::rigid_example());
    Vec e1 = basis_vec(3, 0), e2 = basis_vec(3, 1), e3 = basis_vec(3, 2);
    CHECK(a.product(e1, e2) == vec_scale(Rational(2), e2));
    CHECK(a.product(e2, e1) == vec_scale(Rational(-2), e2));
    CHECK(a.product(e1, e3) == vec_scale(Rational(-2), e3));
    CHECK(a.product(e2, e3) == e1);
    CHECK(a.product(e3, e2) == vec_scale(Rational(-1), e1));
    CHECK(vec_is_zero(a.product(e1, e1)));
}

TEST_CASE("combine with zero bracket gives the commutative algebra") {
    PoissonPair p = instantiate("P_1^2");
    Algebra a = combine(p);
    CHECK(a.as_bilinear() == p.bullet());
    PoissonPair zero(MultilinearMap(2, 2), MultilinearMap(2, 2));
    CHECK(combine(zero).as_bilinear().is_zero());
}

TEST_CASE("split examples") {
    PoissonPair p1 = instantiate("P_1^2");
    PoissonPair back = split(combine(p1));
    CHECK(back.bullet() == p1.bullet());
    CHECK(back.bracket().is_zero());

    PoissonPair rigid = test_support::rigid_example();
    CHECK(split(combine(rigid)) == rigid);

    Algebra zero(2);
    PoissonPair z = split(zero);
    CHECK(z.bullet().is_zero());
    CHECK(z.bracket().is_zero());
}

TEST_CASE("combine/split round trip on random pairs, dims 2..4") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 2 + trial % 3;
        auto parts = sym_skew_parts(random_cochain(rng, 2, n));
        PoissonPair p(parts.symmetric, parts.skew);
        CHECK(split(combine(p)) == p);
        Algebra a(random_cochain(rng, 2, n));
        CHECK(combine(split(a)) == a);
    }
}

TEST_CASE("pair constructor enforces tensor symmetries") {
    std::mt19937_64 rng(22);
    MultilinearMap notsym = random_cochain(rng, 2, 2);
    notsym.coeff({0, 1}, 0) = Rational(1);
    notsym.coeff({1, 0}, 0) = Rational(2);
    CHECK_THROWS_AS(PoissonPair(notsym, MultilinearMap(2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(PoissonPair(MultilinearMap(2, 2), notsym), std::invalid_argument);
    CHECK_THROWS_AS(PoissonPair(MultilinearMap(2, 2), MultilinearMap(2, 3)), DimensionMismatch);
}

TEST_CASE("verify on catalog entries") {
    for (const auto& inst : test_support::catalog_core_instances()) {
        CAPTURE(inst.label);
        AxiomReport rep = verify(inst.pair);
        CHECK(rep.all_ok());
        CHECK(rep.witnesses.empty());
    }
}

TEST_CASE("verify flags the Leibniz breaker with the expected witness") {
    AxiomReport rep = verify(leibniz_breaker());
    CHECK(rep.commutative);
    CHECK(rep.associative);
    CHECK(rep.jacobi);
    CHECK_FALSE(rep.leibniz);
    CHECK_FALSE(rep.markl_remm);
    // the defining-identity residual at (e1,e1,e2) is -4 e2
    Algebra a = combine(leibniz_breaker());
    Vec res = markl_remm_residual(a, 0, 0, 1);
    CHECK(res == Vec{Rational(0), Rational(-4)});
    bool found = false;
    for (const auto& w : rep.witnesses)
        if (w.axiom == "markl_remm") found = true;
    CHECK(found);
}

TEST_CASE("verify on the zero algebra") {
    AxiomReport rep = verify(Algebra(3));
    CHECK(rep.all_ok());
}

TEST_CASE("equivalence of pair axioms and the combined identity") {
    std::mt19937_64 rng(23);
    int flipped = 0, total = 0;
    for (const auto& inst : test_support::catalog_core_instances()) {
        Algebra base = combine(inst.pair);
        for (int t = 0; t < 12; ++t) {
            MultilinearMap noise = random_cochain(rng, 2, base.dim());
            Algebra perturbed(base.as_bilinear() + noise);
            AxiomReport rep = verify(perturbed);
            CHECK(rep.pair_axioms_ok() == rep.markl_remm);
            ++total;
            if (!rep.markl_remm) ++flipped;
        }
    }
    CHECK(flipped > total / 2); // generic noise should break the identity
}

TEST_CASE("associator") {
    Algebra rigid = combine(test_support::rigid_example());
    Vec e1 = basis_vec(3, 0), e2 = basis_vec(3, 1), e3 = basis_vec(3, 2);
    CHECK(associator(rigid, e2, e3, e1) == vec_scale(Rational(-2), e1));

    PoissonPair p1 = instantiate("P_1^2");
    Algebra a1 = combine(p1);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                CHECK(vec_is_zero(associator(a1, basis_vec(2, i), basis_vec(2, j), basis_vec(2, k))));

    CHECK(vec_is_zero(associator(Algebra(2), basis_vec(2, 0), basis_vec(2, 1), basis_vec(2, 0))));
    CHECK_THROWS_AS(associator(rigid, basis_vec(2, 0), e2, e3), DimensionMismatch);
}

TEST_CASE("annihilator dimensions") {
    CatalogParams p5;
    p5.scalars["a"] = Rational(0);
    CHECK(annihilator(combine(instantiate("P_5^2", p5))).dim() == 2); // zero algebra
    CHECK(annihilator(combine(instantiate("P_2^2"))).dim() == 0);     // e1 acts as identity
    CHECK(annihilator(combine(test_support::rigid_example())).dim() == 0);
    CHECK(annihilator(combine(instantiate("P_4^2"))).dim() == 1);

    // annihilator vectors do annihilate, on both sides
    Algebra a = combine(instantiate("P_4^2"));
    for (const Vec& x : annihilator(a).basis())
        for (std::size_t j = 0; j < a.dim(); ++j) {
            CHECK(vec_is_zero(a.product(x, basis_vec(a.dim(), j))));
            CHECK(vec_is_zero(a.product(basis_vec(a.dim(), j), x)));
        }
}

TEST_CASE("one-sided annihilators differ on a lopsided product") {
    // gamma(e1, e2) = e1 only
    MultilinearMap t(2, 2);
    t.coeff({0, 1}, 0) = Rational(1);
    Algebra a(t);
    Subspace left = annihilator(a, AnnihilatorSide::Left);
    Subspace right = annihilator(a, AnnihilatorSide::Right);
    REQUIRE(left.dim() == 1);
    REQUIRE(right.dim() == 1);
    CHECK(left.basis()[0] == Vec{Rational(0), Rational(1)});
    CHECK(right.basis()[0] == Vec{Rational(1), Rational(0)});
    CHECK(annihilator(a).dim() == 0);
}

TEST_CASE("idempotent centrality") {
    CatalogParams a1;
    a1.scalars["a"] = Rational(1);
    PoissonPair p5 = instantiate("P_5^3", a1);
    CHECK(idempotent_central_check(p5, basis_vec(3, 0)));

    PoissonPair p7 = instantiate("P_7^3", a1);
    CHECK(idempotent_central_check(p7, basis_vec(3, 0)));

    CHECK(idempotent_central_check(p5, Vec(3))); // zero vector, vacuously

    CHECK_THROWS_AS(idempotent_central_check(p5, basis_vec(3, 1)), NotIdempotent);

    // every listed basis idempotent of every family is Lie-central
    for (const auto& info : list_entries()) {
        if (!info.params.empty()) continue; // parameterless entries here
        PoissonPair p = instantiate(info.name);
        for (std::size_t i : entry_basis_idempotents(info.name)) {
            CAPTURE(info.name, i);
            CHECK(idempotent_central_check(p, basis_vec(info.dim, i)));
        }
    }
}
