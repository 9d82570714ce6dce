#include "poisson/algebra.hpp"

#include <array>
#include <functional>

#include "poisson/errors.hpp"

namespace poisson {

namespace {

Vec basis_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = Rational(1);
    return v;
}

} // namespace

Algebra::Algebra(MultilinearMap product) : product_(std::move(product)) {
    if (product_.arity() != 2)
        throw std::invalid_argument("algebra product must be bilinear");
}

Vec Algebra::product(const Vec& x, const Vec& y) const {
    std::array<Vec, 2> args{x, y};
    return product_.eval(args);
}

PoissonPair::PoissonPair(MultilinearMap bullet, MultilinearMap bracket)
    : bullet_(std::move(bullet)), bracket_(std::move(bracket)) {
    if (bullet_.arity() != 2 || bracket_.arity() != 2)
        throw std::invalid_argument("pair products must be bilinear");
    if (bullet_.dim() != bracket_.dim())
        throw DimensionMismatch("bullet and bracket dims differ");
    if (!is_symmetric_bilinear(bullet_))
        throw std::invalid_argument("bullet tensor is not symmetric");
    if (!is_skew_bilinear(bracket_))
        throw std::invalid_argument("bracket tensor is not skew");
}

Vec PoissonPair::bullet_product(const Vec& x, const Vec& y) const {
    std::array<Vec, 2> args{x, y};
    return bullet_.eval(args);
}

Vec PoissonPair::bracket_product(const Vec& x, const Vec& y) const {
    std::array<Vec, 2> args{x, y};
    return bracket_.eval(args);
}

Algebra combine(const PoissonPair& p) {
    return Algebra(p.bullet() + p.bracket());
}

PoissonPair split(const Algebra& a) {
    auto parts = sym_skew_parts(a.as_bilinear());
    return PoissonPair(std::move(parts.symmetric), std::move(parts.skew));
}

Vec associator(const Algebra& a, const Vec& x, const Vec& y, const Vec& z) {
    return vec_sub(a.product(a.product(x, y), z), a.product(x, a.product(y, z)));
}

Vec markl_remm_residual(const Algebra& a, std::size_t i, std::size_t j, std::size_t k) {
    const std::size_t n = a.dim();
    Vec x = basis_vec(n, i), y = basis_vec(n, j), z = basis_vec(n, k);
    Vec rhs = vec_sub(vec_add(a.product(a.product(x, z), y), a.product(a.product(y, z), x)),
                      vec_add(a.product(a.product(y, x), z), a.product(a.product(z, x), y)));
    return vec_sub(rhs, vec_scale(Rational(3), associator(a, x, y, z)));
}

namespace {

void check_triples(std::size_t n, bool& flag, std::vector<AxiomWitness>& witnesses,
                   const std::string& name, const std::function<Vec(std::size_t, std::size_t, std::size_t)>& residual) {
    flag = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec r = residual(i, j, k);
                if (!vec_is_zero(r)) {
                    if (flag) witnesses.push_back({name, i, j, k, std::move(r)});
                    flag = false;
                }
            }
}

AxiomReport verify_impl(const PoissonPair& p, const Algebra& combined) {
    const std::size_t n = p.dim();
    AxiomReport rep;
    rep.commutative = is_symmetric_bilinear(p.bullet());

    auto bu = [&](const Vec& x, const Vec& y) { return p.bullet_product(x, y); };
    auto br = [&](const Vec& x, const Vec& y) { return p.bracket_product(x, y); };
    auto e = [&](std::size_t i) { return basis_vec(n, i); };

    check_triples(n, rep.associative, rep.witnesses, "associative",
                  [&](std::size_t i, std::size_t j, std::size_t k) {
                      return vec_sub(bu(bu(e(i), e(j)), e(k)), bu(e(i), bu(e(j), e(k))));
                  });
    check_triples(n, rep.jacobi, rep.witnesses, "jacobi",
                  [&](std::size_t i, std::size_t j, std::size_t k) {
                      return vec_add(vec_add(br(br(e(i), e(j)), e(k)), br(br(e(j), e(k)), e(i))),
                                     br(br(e(k), e(i)), e(j)));
                  });
    check_triples(n, rep.leibniz, rep.witnesses, "leibniz",
                  [&](std::size_t i, std::size_t j, std::size_t k) {
                      return vec_sub(br(bu(e(i), e(j)), e(k)),
                                     vec_add(bu(e(i), br(e(j), e(k))), bu(br(e(i), e(k)), e(j))));
                  });
    check_triples(n, rep.markl_remm, rep.witnesses, "markl_remm",
                  [&](std::size_t i, std::size_t j, std::size_t k) {
                      return markl_remm_residual(combined, i, j, k);
                  });
    return rep;
}

} // namespace

AxiomReport verify(const Algebra& a) {
    return verify_impl(split(a), a);
}

AxiomReport verify(const PoissonPair& p) {
    return verify_impl(p, combine(p));
}

Subspace annihilator(const Algebra& a, AnnihilatorSide side) {
    const std::size_t n = a.dim();
    const bool left = side != AnnihilatorSide::Right;
    const bool right = side != AnnihilatorSide::Left;
    std::vector<Vec> rows;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t s = 0; s < n; ++s) {
            if (left) {
                Vec row(n);
                for (std::size_t i = 0; i < n; ++i) row[i] = a.gamma(i, j, s); // mu0(X, e_j)
                rows.push_back(std::move(row));
            }
            if (right) {
                Vec row(n);
                for (std::size_t i = 0; i < n; ++i) row[i] = a.gamma(j, i, s); // mu0(e_j, X)
                rows.push_back(std::move(row));
            }
        }
    Matrix m(rows.size(), n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = rows[r][c];
    return kernel_basis(m);
}

bool idempotent_central_check(const PoissonPair& p, const Vec& e) {
    if (e.size() != p.dim()) throw DimensionMismatch("vector length != dim");
    Vec ee = p.bullet_product(e, e);
    if (ee != e) throw NotIdempotent("e.e != e");
    const std::size_t n = p.dim();
    for (std::size_t j = 0; j < n; ++j) {
        Vec ej(n);
        ej[j] = Rational(1);
        if (!vec_is_zero(p.bracket_product(e, ej))) return false;
    }
    return true;
}

} // namespace poisson
