#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "poisson/errors.hpp"
#include "poisson/linalg.hpp"

using namespace poisson;

namespace {

Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size(), c = rows.begin()->size();
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m.at(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

Vec vec(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.push_back(Rational(x));
    return v;
}

} // namespace

TEST_CASE("rational arithmetic and canonical form") {
    Rational a(2, 4);
    CHECK(a.str() == "1/2");
    CHECK(Rational(-3, -6).str() == "1/2");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
    CHECK((Rational(1, 3) * Rational(3, 5)).str() == "1/5");
    CHECK((Rational(1) / Rational(4)).str() == "1/4");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK_THROWS_AS((void)(Rational(1) / Rational(0)), ParseError);
}

TEST_CASE("rational parse round trip") {
    for (const char* s : {"0", "7", "-7", "1/2", "-22/7", "10000000000000000001/3"}) {
        CHECK(Rational::parse(s).str() == s);
    }
    CHECK(Rational::parse("4/6").str() == "2/3");
    CHECK(Rational::parse("1/-2").str() == "-1/2");
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);

    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 1000);
    for (int i = 0; i < 200; ++i) {
        Rational r(num(rng), den(rng));
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("kernel_basis on the spec triples") {
    SUBCASE("identity 3x3 is injective") {
        CHECK(kernel_basis(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).dim() == 0);
    }
    SUBCASE("zero 2x5 has full kernel") {
        Matrix z(2, 5);
        Subspace k = kernel_basis(z);
        CHECK(k.dim() == 5);
        CHECK(k.ambient_dim() == 5);
    }
    SUBCASE("rank-1 2x2") {
        Subspace k = kernel_basis(from_rows({{1, 1}, {2, 2}}));
        REQUIRE(k.dim() == 1);
        CHECK(k.basis()[0] == vec({1, -1}));
    }
}

TEST_CASE("solve_affine on the spec systems") {
    SUBCASE("identity system") {
        auto sol = solve_affine(from_rows({{1, 0}, {0, 1}}), vec({3, -1}));
        REQUIRE(sol.has_value());
        CHECK(sol->particular == vec({3, -1}));
        CHECK(sol->kernel.dim() == 0);
    }
    SUBCASE("inconsistent") {
        CHECK_FALSE(solve_affine(from_rows({{1, 1}, {1, 1}}), vec({1, 2})).has_value());
    }
    SUBCASE("underdetermined, deterministic particular") {
        auto sol = solve_affine(from_rows({{1, 1}, {1, 1}}), vec({2, 2}));
        REQUIRE(sol.has_value());
        CHECK(sol->particular == vec({2, 0}));
        REQUIRE(sol->kernel.dim() == 1);
        CHECK(sol->kernel.basis()[0] == vec({1, -1}));
    }
    SUBCASE("rhs length checked") {
        CHECK_THROWS_AS(solve_affine(from_rows({{1, 1}}), vec({1, 2})), DimensionMismatch);
    }
}

TEST_CASE("intersect") {
    Subspace full = Subspace::from_spanning(2, {vec({1, 0}), vec({0, 1})});
    CHECK(intersect(full, full) == full);

    Subspace x = Subspace::from_spanning(2, {vec({1, 0})});
    Subspace y = Subspace::from_spanning(2, {vec({0, 1})});
    CHECK(intersect(x, y).dim() == 0);

    Subspace diag = Subspace::from_spanning(2, {vec({1, 1})});
    Subspace i = intersect(full, diag);
    REQUIRE(i.dim() == 1);
    CHECK(i.basis()[0] == vec({1, 1}));

    Subspace amb3 = Subspace::from_spanning(3, {vec({1, 0, 0})});
    CHECK_THROWS_AS(intersect(x, amb3), DimensionMismatch);
}

TEST_CASE("rank-nullity on random matrices up to 100x100") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> entry(-3, 3);
    for (auto [r, c] : {std::pair<std::size_t, std::size_t>{5, 8},
                        {12, 7},
                        {30, 30},
                        {100, 100}}) {
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(entry(rng));
        Subspace k = kernel_basis(m);
        CHECK(m.rank() + k.dim() == c);
        for (const Vec& v : k.basis()) CHECK(vec_is_zero(m.apply(v)));
    }
}

TEST_CASE("solve_affine verifies m x = rhs exactly when consistent") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> entry(-4, 4);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t r = 3 + trial % 5, c = 2 + trial % 7;
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(entry(rng));
        Vec x0(c);
        for (auto& x : x0) x = Rational(entry(rng));
        Vec rhs = m.apply(x0); // consistent by construction
        auto sol = solve_affine(m, rhs);
        REQUIRE(sol.has_value());
        CHECK(m.apply(sol->particular) == rhs);
    }
}

TEST_CASE("subspace contains and canonical equality") {
    Subspace s = Subspace::from_spanning(3, {vec({1, 1, 0}), vec({2, 2, 0}), vec({0, 0, 3})});
    CHECK(s.dim() == 2);
    CHECK(s.contains(vec({5, 5, -7})));
    CHECK_FALSE(s.contains(vec({1, 0, 0})));
    Subspace t = Subspace::from_spanning(3, {vec({0, 0, 1}), vec({-1, -1, 4})});
    CHECK(s == t);
}
