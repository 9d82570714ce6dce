#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "poisson/algebra.hpp"
#include "poisson/catalog.hpp"
#include "poisson/errors.hpp"

using namespace poisson;
using test_support::basis_vec;

TEST_CASE("the classification has 5 + 12 = 17 families") {
    auto entries = list_entries();
    CHECK(entries.size() == 17);
    std::size_t dim2 = 0, dim3 = 0;
    for (const auto& e : entries) (e.dim == 2 ? dim2 : dim3)++;
    CHECK(dim2 == 5);
    CHECK(dim3 == 12);
}

TEST_CASE("parameter signatures") {
    auto entries = list_entries();
    auto find = [&](const std::string& name) -> const CatalogEntryInfo& {
        for (const auto& e : entries)
            if (e.name == name) return e;
        FAIL("missing entry ", name);
        return entries.front();
    };
    const auto& p52 = find("P_5^2");
    REQUIRE(p52.params.size() == 1);
    CHECK(p52.params[0].name == "a");
    CHECK(p52.params[0].domain == ParamDomain::Binary01);

    const auto& p10 = find("P_10^3");
    REQUIRE(p10.params.size() == 2);
    CHECK(p10.params[0].name == "a");
    CHECK(p10.params[1].name == "b");
    CHECK(p10.params[0].domain == ParamDomain::FreeRational);

    const auto& p12 = find("P_12^3");
    REQUIRE(p12.params.size() == 1);
    CHECK(p12.params[0].domain == ParamDomain::LieBracket);

    CHECK(find("P_1^2").params.empty());
}

TEST_CASE("instantiate P_1^2") {
    PoissonPair p = instantiate("P_1^2");
    Vec e1 = basis_vec(2, 0), e2 = basis_vec(2, 1);
    CHECK(p.bullet_product(e1, e1) == e1);
    CHECK(p.bullet_product(e1, e2) == e2);
    CHECK(p.bullet_product(e2, e1) == e2);
    CHECK(p.bullet_product(e2, e2) == e2);
    CHECK(p.bracket().is_zero());
}

TEST_CASE("instantiate P_10^3(a=1,b=0)") {
    CatalogParams params;
    params.scalars["a"] = Rational(1);
    params.scalars["b"] = Rational(0);
    PoissonPair p = instantiate("P_10^3", params);
    Vec e1 = basis_vec(3, 0), e2 = basis_vec(3, 1), e3 = basis_vec(3, 2);
    CHECK(p.bullet_product(e1, e1) == e2);
    CHECK(vec_is_zero(p.bullet_product(e2, e3)));
    CHECK(p.bracket_product(e1, e3) == e2);
    CHECK(p.bracket_product(e3, e1) == vec_scale(Rational(-1), e2));
}

TEST_CASE("instantiate P_12^3 with the sl2 bracket") {
    PoissonPair p = test_support::rigid_example();
    CHECK(p.bullet().is_zero());
    Vec e1 = basis_vec(3, 0), e2 = basis_vec(3, 1), e3 = basis_vec(3, 2);
    CHECK(p.bracket_product(e1, e2) == vec_scale(Rational(2), e2));
    CHECK(p.bracket_product(e1, e3) == vec_scale(Rational(-2), e3));
    CHECK(p.bracket_product(e2, e3) == e1);
}

TEST_CASE("instantiation errors") {
    CHECK_THROWS_AS(instantiate("P_99^9"), UnknownEntry);
    CHECK_THROWS_AS(instantiate("P_5^2"), BadParameter); // missing a

    CatalogParams bad;
    bad.scalars["a"] = Rational(2);
    CHECK_THROWS_AS(instantiate("P_5^2", bad), BadParameter); // outside {0,1}

    // P_12^3: a skew bracket failing Jacobi
    MultilinearMap br(2, 3);
    br.coeff({0, 1}, 2) = Rational(1);
    br.coeff({1, 0}, 2) = Rational(-1);
    br.coeff({0, 2}, 0) = Rational(1);
    br.coeff({2, 0}, 0) = Rational(-1);
    CatalogParams withbr;
    withbr.bracket = br;
    CHECK_THROWS_AS(instantiate("P_12^3", withbr), BadParameter);

    // non-skew tensor rejected
    MultilinearMap notskew(2, 3);
    notskew.coeff({0, 1}, 2) = Rational(1);
    CatalogParams p2;
    p2.bracket = notskew;
    CHECK_THROWS_AS(instantiate("P_12^3", p2), BadParameter);

    CHECK_THROWS_AS(named_bracket("so8"), UnknownEntry);
}

TEST_CASE("every instantiation over the sample grid is a Poisson algebra") {
    for (const auto& inst : test_support::catalog_instances()) {
        CAPTURE(inst.label);
        AxiomReport rep = verify(inst.pair);
        CHECK(rep.all_ok());
        // combined structure constants satisfy the defining identity with
        // zero residual at every index
        Algebra a = combine(inst.pair);
        bool all_zero = true;
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j)
                for (std::size_t k = 0; k < a.dim(); ++k)
                    if (!vec_is_zero(markl_remm_residual(a, i, j, k))) all_zero = false;
        CHECK(all_zero);
    }
}

TEST_CASE("heisenberg bracket is nilpotent Lie") {
    CatalogParams p;
    p.bracket = named_bracket("heisenberg");
    PoissonPair pair = instantiate("P_12^3", p);
    CHECK(verify(pair).all_ok());
    Vec e1 = basis_vec(3, 0), e2 = basis_vec(3, 1), e3 = basis_vec(3, 2);
    CHECK(pair.bracket_product(e1, e2) == e3);
    CHECK(vec_is_zero(pair.bracket_product(e1, e3)));
    CHECK(vec_is_zero(pair.bracket_product(e2, e3)));
}
