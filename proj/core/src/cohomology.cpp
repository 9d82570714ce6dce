#include "poisson/cohomology.hpp"

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

/// Builds an arity-k map from its values on basis tuples.
MultilinearMap from_basis_values(std::size_t k, std::size_t n,
                                 const std::function<Vec(std::span<const std::size_t>)>& fn) {
    MultilinearMap out(k, n);
    std::vector<std::size_t> idx(k, 0);
    std::size_t total = 1;
    for (std::size_t a = 0; a < k; ++a) total *= n;
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rem = flat;
        for (std::size_t a = k; a-- > 0;) {
            idx[a] = rem % n;
            rem /= n;
        }
        Vec val = fn(idx);
        for (std::size_t s = 0; s < n; ++s)
            if (!val[s].is_zero()) out.coeff(idx, s) = val[s];
    }
    return out;
}

void require_bilinear_on(const Algebra& a, const MultilinearMap& phi) {
    if (phi.arity() != 2) throw std::invalid_argument("cochain must be bilinear");
    if (phi.dim() != a.dim()) throw DimensionMismatch("cochain dim != algebra dim");
}

} // namespace

MultilinearMap delta1_P(const Algebra& a, const MultilinearMap& f) {
    if (f.arity() != 1) throw std::invalid_argument("delta1_P input must be linear");
    if (f.dim() != a.dim()) throw DimensionMismatch("cochain dim != algebra dim");
    const std::size_t n = a.dim();
    auto fv = [&](const Vec& x) {
        std::array<Vec, 1> args{x};
        return f.eval(args);
    };
    return from_basis_values(2, n, [&](std::span<const std::size_t> idx) {
        Vec X = basis_vec(n, idx[0]), Y = basis_vec(n, idx[1]);
        return vec_sub(vec_add(a.product(fv(X), Y), a.product(X, fv(Y))),
                       fv(a.product(X, Y)));
    });
}

MultilinearMap delta2_P(const Algebra& a, const MultilinearMap& phi) {
    require_bilinear_on(a, phi);
    const std::size_t n = a.dim();
    auto m = [&](const Vec& x, const Vec& y) { return a.product(x, y); };
    auto p = [&](const Vec& x, const Vec& y) {
        std::array<Vec, 2> args{x, y};
        return phi.eval(args);
    };
    const Rational three(3);
    return from_basis_values(3, n, [&](std::span<const std::size_t> idx) {
        Vec X = basis_vec(n, idx[0]), Y = basis_vec(n, idx[1]), Z = basis_vec(n, idx[2]);
        Vec out = vec_scale(three, p(m(X, Y), Z));
        out = vec_sub(out, vec_scale(three, p(X, m(Y, Z))));
        out = vec_sub(out, p(m(X, Z), Y));
        out = vec_sub(out, p(m(Y, Z), X));
        out = vec_add(out, p(m(Y, X), Z));
        out = vec_add(out, p(m(Z, X), Y));
        out = vec_add(out, vec_scale(three, m(p(X, Y), Z)));
        out = vec_sub(out, vec_scale(three, m(X, p(Y, Z))));
        out = vec_sub(out, m(p(X, Z), Y));
        out = vec_sub(out, m(p(Y, Z), X));
        out = vec_add(out, m(p(Y, X), Z));
        out = vec_add(out, m(p(Z, X), Y));
        return out;
    });
}

MultilinearMap delta2_P_via_group_algebra(const Algebra& a, const MultilinearMap& phi) {
    require_bilinear_on(a, phi);
    const MultilinearMap& mu = a.as_bilinear();
    MultilinearMap inner = act(group_constants::v_P(), comp(1, mu, phi) + comp(1, phi, mu));
    MultilinearMap outer = comp(2, mu, phi) + comp(2, phi, mu);
    return inner - Rational(3) * outer;
}

MultilinearMap delta2_C(const Algebra& a, const MultilinearMap& phi) {
    require_bilinear_on(a, phi);
    const std::size_t n = a.dim();
    PoissonPair pr = split(a);
    auto br = [&](const Vec& x, const Vec& y) { return pr.bracket_product(x, y); };
    auto p = [&](const Vec& x, const Vec& y) {
        std::array<Vec, 2> args{x, y};
        return phi.eval(args);
    };
    return from_basis_values(3, n, [&](std::span<const std::size_t> idx) {
        Vec X = basis_vec(n, idx[0]), Y = basis_vec(n, idx[1]), Z = basis_vec(n, idx[2]);
        Vec out = p(br(X, Y), Z);
        out = vec_add(out, p(br(Y, Z), X));
        out = vec_add(out, p(br(Z, X), Y));
        out = vec_add(out, br(p(X, Y), Z));
        out = vec_add(out, br(p(Y, Z), X));
        out = vec_add(out, br(p(Z, X), Y));
        return out;
    });
}

MultilinearMap delta2_H(const Algebra& a, const MultilinearMap& phi) {
    require_bilinear_on(a, phi);
    const std::size_t n = a.dim();
    PoissonPair pr = split(a);
    auto bu = [&](const Vec& x, const Vec& y) { return pr.bullet_product(x, y); };
    auto p = [&](const Vec& x, const Vec& y) {
        std::array<Vec, 2> args{x, y};
        return phi.eval(args);
    };
    return from_basis_values(3, n, [&](std::span<const std::size_t> idx) {
        Vec X = basis_vec(n, idx[0]), Y = basis_vec(n, idx[1]), Z = basis_vec(n, idx[2]);
        Vec out = p(bu(X, Y), Z);
        out = vec_sub(out, p(X, bu(Y, Z)));
        out = vec_add(out, bu(p(X, Y), Z));
        out = vec_sub(out, bu(X, p(Y, Z)));
        return out;
    });
}

MultilinearMap operator_L1(const Algebra& a, const MultilinearMap& phi) {
    require_bilinear_on(a, phi);
    const std::size_t n = a.dim();
    PoissonPair pr = split(a);
    auto bu = [&](const Vec& x, const Vec& y) { return pr.bullet_product(x, y); };
    auto p = [&](const Vec& x, const Vec& y) {
        std::array<Vec, 2> args{x, y};
        return phi.eval(args);
    };
    return from_basis_values(3, n, [&](std::span<const std::size_t> idx) {
        Vec X = basis_vec(n, idx[0]), Y = basis_vec(n, idx[1]), Z = basis_vec(n, idx[2]);
        return vec_sub(vec_sub(p(bu(X, Y), Z), bu(p(X, Z), Y)), bu(X, p(Y, Z)));
    });
}

MultilinearMap operator_L2(const Algebra& a, const MultilinearMap& phi) {
    require_bilinear_on(a, phi);
    const std::size_t n = a.dim();
    PoissonPair pr = split(a);
    auto br = [&](const Vec& x, const Vec& y) { return pr.bracket_product(x, y); };
    auto p = [&](const Vec& x, const Vec& y) {
        std::array<Vec, 2> args{x, y};
        return phi.eval(args);
    };
    return from_basis_values(3, n, [&](std::span<const std::size_t> idx) {
        Vec X = basis_vec(n, idx[0]), Y = basis_vec(n, idx[1]), Z = basis_vec(n, idx[2]);
        Vec out = vec_scale(Rational(-3), p(X, br(Y, Z)));
        out = vec_add(out, br(p(X, Y), Z));
        out = vec_sub(out, br(p(X, Z), Y));
        return out;
    });
}

MultilinearMap operator_L1_via_group_algebra(const Algebra& a, const MultilinearMap& phi) {
    require_bilinear_on(a, phi);
    const MultilinearMap& mu = a.as_bilinear();
    auto id3 = Permutation::identity(3);
    auto t12 = Permutation::transposition(3, 1, 2);
    auto t23 = Permutation::transposition(3, 2, 3);
    auto c = Permutation::cycle3();
    GroupAlgebraElement id_t12(id3);
    id_t12.add_term(t12, Rational(1));
    GroupAlgebraElement t23_c(t23);
    t23_c.add_term(c, Rational(1));
    MultilinearMap sum = act(id_t12, comp(1, phi, mu)) - act(t23_c, comp(1, mu, phi)) -
                         act(id_t12, comp(2, mu, phi));
    return Rational(1, 2) * sum;
}

MultilinearMap delta2_C_via_group_algebra(const Algebra& a, const MultilinearMap& phi) {
    require_bilinear_on(a, phi);
    const MultilinearMap& mu = a.as_bilinear();
    auto c = Permutation::cycle3();
    GroupAlgebraElement cyc(Permutation::identity(3));
    cyc.add_term(c, Rational(1));
    cyc.add_term(c.then(c), Rational(1));
    MultilinearMap sum = act(group_constants::v_L(), comp(1, phi, mu)) +
                         act(cyc, comp(1, mu, phi) - comp(2, mu, phi));
    return Rational(1, 2) * sum;
}

MultilinearMap delta2_H_via_group_algebra(const Algebra& a, const MultilinearMap& phi) {
    require_bilinear_on(a, phi);
    const MultilinearMap& mu = a.as_bilinear();
    auto id3 = Permutation::identity(3);
    auto t12 = Permutation::transposition(3, 1, 2);
    auto t23 = Permutation::transposition(3, 2, 3);
    auto c = Permutation::cycle3();
    GroupAlgebraElement id_t12(id3);
    id_t12.add_term(t12, Rational(1));
    GroupAlgebraElement id_t23(id3);
    id_t23.add_term(t23, Rational(1));
    GroupAlgebraElement id_minus_c(id3);
    id_minus_c.add_term(c, Rational(-1));
    GroupAlgebraElement c2_minus_id(c.then(c));
    c2_minus_id.add_term(id3, Rational(-1));
    MultilinearMap sum = act(id_t12, comp(1, phi, mu)) - act(id_t23, comp(2, phi, mu)) +
                         act(id_minus_c, comp(1, mu, phi)) + act(c2_minus_id, comp(2, mu, phi));
    return Rational(1, 2) * sum;
}

Delta2Decomposition decompose_delta2(const Algebra& a, const MultilinearMap& phi) {
    auto parts = sym_skew_parts(phi);
    MultilinearMap rhs = delta2_C(a, parts.skew) + delta2_C(a, parts.symmetric) +
                         delta2_H(a, parts.skew) + Rational(2) * delta2_H(a, parts.symmetric) +
                         operator_L1(a, parts.skew) + operator_L2(a, parts.symmetric);
    rhs = Rational(2) * rhs;
    MultilinearMap lhs = delta2_P(a, phi);
    bool equal = (lhs - rhs).is_zero();
    return {std::move(lhs), std::move(rhs), equal};
}

bool prop3_check(const Algebra& a, const MultilinearMap& phi) {
    auto parts = sym_skew_parts(phi);
    MultilinearMap dp = delta2_P(a, phi);
    MultilinearMap alt = act(group_constants::V(3), dp);
    if (!(alt - Rational(12) * delta2_C(a, parts.skew)).is_zero()) return false;
    auto t13 = Permutation::transposition(3, 1, 3);
    auto t23 = Permutation::transposition(3, 2, 3);
    auto c = Permutation::cycle3();
    MultilinearMap q = dp - act(t13, dp) + act(t23, dp) - act(c.then(c), dp);
    return (q - Rational(12) * delta2_H(a, parts.symmetric)).is_zero();
}

MultilinearMap lichnerowicz_delta2(const PoissonPair& p, const MultilinearMap& phi) {
    if (phi.arity() != 2 || phi.dim() != p.dim())
        throw DimensionMismatch("cochain shape mismatch");
    if (!is_skew_bilinear(phi)) throw NotSkew("Lichnerowicz differential needs a skew cochain");
    const std::size_t n = p.dim();
    auto br = [&](const Vec& x, const Vec& y) { return p.bracket_product(x, y); };
    auto f = [&](const Vec& x, const Vec& y) {
        std::array<Vec, 2> args{x, y};
        return phi.eval(args);
    };
    const Rational two(2);
    return from_basis_values(3, n, [&](std::span<const std::size_t> idx) {
        Vec X = basis_vec(n, idx[0]), Y = basis_vec(n, idx[1]), Z = basis_vec(n, idx[2]);
        Vec out = vec_scale(two, f(br(X, Y), Z));
        out = vec_add(out, vec_scale(two, f(br(Y, Z), X)));
        out = vec_sub(out, vec_scale(two, f(br(X, Z), Y)));
        out = vec_add(out, vec_scale(two, br(f(X, Y), Z)));
        out = vec_add(out, vec_scale(two, br(f(Y, Z), X)));
        out = vec_sub(out, vec_scale(two, br(f(X, Z), Y)));
        return out;
    });
}

MultilinearMap chevalley_delta(const PoissonPair& p, const MultilinearMap& psi) {
    if (psi.dim() != p.dim()) throw DimensionMismatch("cochain dim != algebra dim");
    const std::size_t k = psi.arity();
    if (k > 3) throw std::invalid_argument("chevalley_delta supports arity <= 3");
    const std::size_t n = p.dim();
    auto br = [&](const Vec& x, const Vec& y) { return p.bracket_product(x, y); };
    return from_basis_values(k + 1, n, [&](std::span<const std::size_t> idx) {
        std::vector<Vec> xs;
        xs.reserve(k + 1);
        for (std::size_t t = 0; t < k + 1; ++t) xs.push_back(basis_vec(n, idx[t]));
        Vec out(n);
        for (std::size_t i = 0; i < k + 1; ++i) {
            std::vector<Vec> rest;
            for (std::size_t t = 0; t < k + 1; ++t)
                if (t != i) rest.push_back(xs[t]);
            Vec term = br(xs[i], psi.eval(rest));
            out = (i % 2 == 0) ? vec_add(out, term) : vec_sub(out, term);
        }
        for (std::size_t i = 0; i < k + 1; ++i)
            for (std::size_t j = i + 1; j < k + 1; ++j) {
                std::vector<Vec> args;
                args.push_back(br(xs[i], xs[j]));
                for (std::size_t t = 0; t < k + 1; ++t)
                    if (t != i && t != j) args.push_back(xs[t]);
                Vec term = psi.eval(args);
                out = ((i + j) % 2 == 0) ? vec_add(out, term) : vec_sub(out, term);
            }
        return out;
    });
}

MultilinearMap hochschild_delta(const PoissonPair& p, const MultilinearMap& psi) {
    if (psi.dim() != p.dim()) throw DimensionMismatch("cochain dim != algebra dim");
    const std::size_t k = psi.arity();
    if (k > 3) throw std::invalid_argument("hochschild_delta supports arity <= 3");
    const std::size_t n = p.dim();
    auto bu = [&](const Vec& x, const Vec& y) { return p.bullet_product(x, y); };
    return from_basis_values(k + 1, n, [&](std::span<const std::size_t> idx) {
        std::vector<Vec> xs;
        xs.reserve(k + 1);
        for (std::size_t t = 0; t < k + 1; ++t) xs.push_back(basis_vec(n, idx[t]));
        std::vector<Vec> tail(xs.begin() + 1, xs.end());
        Vec out = bu(xs[0], psi.eval(tail));
        for (std::size_t i = 0; i + 1 < k + 1; ++i) {
            std::vector<Vec> args;
            for (std::size_t t = 0; t < i; ++t) args.push_back(xs[t]);
            args.push_back(bu(xs[i], xs[i + 1]));
            for (std::size_t t = i + 2; t < k + 1; ++t) args.push_back(xs[t]);
            Vec term = psi.eval(args);
            out = (i % 2 == 0) ? vec_sub(out, term) : vec_add(out, term);
        }
        std::vector<Vec> head(xs.begin(), xs.end() - 1);
        Vec last = bu(psi.eval(head), xs.back());
        out = ((k + 1) % 2 == 0) ? vec_add(out, last) : vec_sub(out, last);
        return out;
    });
}

Matrix operator_matrix(const std::vector<MultilinearMap>& domain_basis,
                       const std::function<MultilinearMap(const MultilinearMap&)>& op) {
    if (domain_basis.empty()) return Matrix(0, 0);
    std::vector<Vec> cols;
    cols.reserve(domain_basis.size());
    for (const auto& b : domain_basis) cols.push_back(op(b).coefficients());
    Matrix m(cols[0].size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != m.rows()) throw DimensionMismatch("operator image sizes differ");
        for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

namespace {

std::function<MultilinearMap(const MultilinearMap&)> arity2_operator(const Algebra& a,
                                                                     OperatorKind kind) {
    switch (kind) {
        case OperatorKind::P2:
            return [&a](const MultilinearMap& m) { return delta2_P(a, m); };
        case OperatorKind::C2:
            return [&a](const MultilinearMap& m) { return delta2_C(a, m); };
        case OperatorKind::H2:
            return [&a](const MultilinearMap& m) { return delta2_H(a, m); };
        case OperatorKind::L1:
            return [&a](const MultilinearMap& m) { return operator_L1(a, m); };
        case OperatorKind::L2:
            return [&a](const MultilinearMap& m) { return operator_L2(a, m); };
        case OperatorKind::LP2:
            return [&a](const MultilinearMap& m) { return lichnerowicz_delta2(split(a), m); };
        case OperatorKind::Chevalley2:
            return [&a](const MultilinearMap& m) { return chevalley_delta(split(a), m); };
        case OperatorKind::Hochschild2:
            return [&a](const MultilinearMap& m) { return hochschild_delta(split(a), m); };
        default:
            throw std::invalid_argument("cocycle_space needs an arity-2 operator kind");
    }
}

} // namespace

Subspace cocycle_space(const Algebra& a, OperatorKind kind, SymmetryFilter filter) {
    if (kind == OperatorKind::LP2 && filter != SymmetryFilter::Skew)
        throw NotSkew("the Lichnerowicz operator is defined on the skew slice");
    auto op = arity2_operator(a, kind);
    auto domain = cochain_basis(2, a.dim(), filter);
    Matrix m = operator_matrix(domain, op);
    Subspace coords = kernel_basis(m);
    // embed kernel coordinates back into the ambient n^3 cochain space
    const std::size_t ambient = a.dim() * a.dim() * a.dim();
    std::vector<Vec> vecs;
    for (const Vec& kv : coords.basis()) {
        Vec v(ambient);
        for (std::size_t c = 0; c < kv.size(); ++c) {
            if (kv[c].is_zero()) continue;
            const Vec& b = domain[c].coefficients();
            for (std::size_t t = 0; t < ambient; ++t) v[t] += kv[c] * b[t];
        }
        vecs.push_back(std::move(v));
    }
    return Subspace::from_spanning(ambient, vecs);
}

bool theorem5_check(const Algebra& a, const MultilinearMap& phi) {
    auto parts = sym_skew_parts(phi);
    bool side1 = delta2_P(a, phi).is_zero();
    bool cond_i = delta2_C(a, parts.skew).is_zero() && delta2_H(a, parts.symmetric).is_zero();
    MultilinearMap mixed = delta2_C(a, parts.symmetric) + delta2_H(a, parts.skew) +
                           operator_L1(a, parts.skew) + operator_L2(a, parts.symmetric);
    bool side2 = cond_i && mixed.is_zero();
    return side1 == side2;
}

} // namespace poisson
