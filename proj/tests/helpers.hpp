#ifndef POISSON_TESTS_HELPERS_HPP
#define POISSON_TESTS_HELPERS_HPP

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "poisson/catalog.hpp"
#include "poisson/multilinear.hpp"

namespace test_support {

using poisson::MultilinearMap;
using poisson::PoissonPair;
using poisson::Rational;
using poisson::Vec;

inline Vec basis_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = Rational(1);
    return v;
}

inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<int> den_pick(0, 3);
    static const long dens[4] = {1, 1, 2, 3};
    return Rational(num(rng), dens[den_pick(rng)]);
}

inline MultilinearMap random_cochain(std::mt19937_64& rng, std::size_t arity, std::size_t dim) {
    MultilinearMap m(arity, dim);
    Vec coeffs(m.coefficients().size());
    for (auto& c : coeffs) c = random_rational(rng);
    return MultilinearMap::from_coefficients(arity, dim, std::move(coeffs));
}

inline MultilinearMap random_skew(std::mt19937_64& rng, std::size_t dim) {
    return poisson::sym_skew_parts(random_cochain(rng, 2, dim)).skew;
}

inline MultilinearMap random_symmetric(std::mt19937_64& rng, std::size_t dim) {
    return poisson::sym_skew_parts(random_cochain(rng, 2, dim)).symmetric;
}

struct Instance {
    std::string label;
    PoissonPair pair;
};

/// The full acceptance grid: every family, parameters sampled over the
/// intersection of {0,1,-1,2} with the declared domain, both named brackets
/// for P_12^3.
inline std::vector<Instance> catalog_instances() {
    using poisson::CatalogParams;
    std::vector<Instance> out;
    auto add = [&](const std::string& label, const std::string& name, CatalogParams p) {
        out.push_back({label, poisson::instantiate(name, p)});
    };
    for (const char* name : {"P_1^2", "P_2^2", "P_3^2", "P_4^2"})
        add(name, name, {});
    for (long a : {0L, 1L}) {
        CatalogParams p;
        p.scalars["a"] = Rational(a);
        add("P_5^2(a=" + std::to_string(a) + ")", "P_5^2", p);
    }
    for (const char* name : {"P_1^3", "P_2^3", "P_3^3", "P_4^3", "P_6^3", "P_8^3", "P_9^3", "P_11^3"})
        add(name, name, {});
    for (const char* name : {"P_5^3", "P_7^3"})
        for (long a : {0L, 1L}) {
            CatalogParams p;
            p.scalars["a"] = Rational(a);
            add(std::string(name) + "(a=" + std::to_string(a) + ")", name, p);
        }
    for (long a : {0L, 1L, -1L, 2L})
        for (long b : {0L, 1L, -1L, 2L}) {
            CatalogParams p;
            p.scalars["a"] = Rational(a);
            p.scalars["b"] = Rational(b);
            add("P_10^3(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ")", "P_10^3", p);
        }
    for (const char* br : {"sl2", "heisenberg"}) {
        CatalogParams p;
        p.bracket = poisson::named_bracket(br);
        add(std::string("P_12^3(") + br + ")", "P_12^3", p);
    }
    return out;
}

/// One representative instantiation per family (brackets present where the
/// family has them); cheaper set for unit tests.
inline std::vector<Instance> catalog_core_instances() {
    using poisson::CatalogParams;
    std::vector<Instance> out;
    auto add = [&](const std::string& label, const std::string& name, CatalogParams p) {
        out.push_back({label, poisson::instantiate(name, p)});
    };
    for (const char* name : {"P_1^2", "P_2^2", "P_3^2", "P_4^2"})
        add(name, name, {});
    for (long a : {0L, 1L}) {
        CatalogParams p;
        p.scalars["a"] = Rational(a);
        add("P_5^2(a=" + std::to_string(a) + ")", "P_5^2", p);
    }
    for (const char* name : {"P_1^3", "P_2^3", "P_3^3", "P_4^3", "P_6^3", "P_8^3", "P_9^3", "P_11^3"})
        add(name, name, {});
    for (const char* name : {"P_5^3", "P_7^3"}) {
        CatalogParams p;
        p.scalars["a"] = Rational(1);
        add(std::string(name) + "(a=1)", name, p);
    }
    {
        CatalogParams p;
        p.scalars["a"] = Rational(1);
        p.scalars["b"] = Rational(1);
        add("P_10^3(a=1,b=1)", "P_10^3", p);
    }
    for (const char* br : {"sl2", "heisenberg"}) {
        CatalogParams p;
        p.bracket = poisson::named_bracket(br);
        add(std::string("P_12^3(") + br + ")", "P_12^3", p);
    }
    return out;
}

/// The rigid three-dimensional example: zero bullet, sl2 bracket.
inline PoissonPair rigid_example() {
    poisson::CatalogParams p;
    p.bracket = poisson::named_bracket("sl2");
    return poisson::instantiate("P_12^3", p);
}

} // namespace test_support

#endif
