#include "poisson/deformation.hpp"

#include <array>

#include "poisson/errors.hpp"

namespace poisson {

namespace {

Vec basis_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = Rational(1);
    return v;
}

void require_poisson(const Algebra& a) {
    if (!verify(a).markl_remm) throw NotPoisson("base algebra fails the defining identity");
}

/// Kernel of a stacked list of operators over a filtered bilinear domain,
/// embedded in ambient n^3 coordinates.
Subspace joint_kernel(std::size_t n, SymmetryFilter filter,
                      const std::vector<std::function<MultilinearMap(const MultilinearMap&)>>& ops) {
    auto domain = cochain_basis(2, n, filter);
    std::vector<Vec> cols;
    cols.reserve(domain.size());
    for (const auto& b : domain) {
        Vec col;
        for (const auto& op : ops) {
            Vec part = op(b).coefficients();
            col.insert(col.end(), part.begin(), part.end());
        }
        cols.push_back(std::move(col));
    }
    if (domain.empty()) return Subspace(n * n * n);
    Matrix m(cols[0].size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, c) = cols[c][r];
    Subspace coords = kernel_basis(m);
    const std::size_t ambient = n * n * n;
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

MultilinearMap lie_k_deriv_residual(const PoissonPair& p, const MultilinearMap& psi) {
    const std::size_t k = psi.arity();
    const std::size_t n = p.dim();
    auto br = [&](const Vec& x, const Vec& y) { return p.bracket_product(x, y); };
    MultilinearMap out(k + 1, n);
    std::vector<std::size_t> idx(k + 1, 0);
    std::size_t total = 1;
    for (std::size_t a = 0; a < k + 1; ++a) total *= n;
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rem = flat;
        for (std::size_t a = k + 1; a-- > 0;) {
            idx[a] = rem % n;
            rem /= n;
        }
        std::vector<Vec> xs;
        xs.reserve(k + 1);
        for (std::size_t t = 0; t < k + 1; ++t) xs.push_back(basis_vec(n, idx[t]));
        std::vector<Vec> head(xs.begin(), xs.end() - 1);
        Vec val = br(psi.eval(head), xs.back());
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<Vec> args = head;
            args[i] = br(xs[i], xs.back());
            val = vec_sub(val, psi.eval(args));
        }
        for (std::size_t s = 0; s < n; ++s)
            if (!val[s].is_zero()) out.coeff(idx, s) = val[s];
    }
    return out;
}

MultilinearMap biderivation_residual(const PoissonPair& p, const MultilinearMap& phi) {
    const std::size_t n = p.dim();
    auto br = [&](const Vec& x, const Vec& y) { return p.bracket_product(x, y); };
    auto f = [&](const Vec& x, const Vec& y) {
        std::array<Vec, 2> args{x, y};
        return phi.eval(args);
    };
    MultilinearMap out(3, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec X = basis_vec(n, i), Y = basis_vec(n, j), Z = basis_vec(n, k);
                Vec val = vec_sub(vec_sub(br(f(X, Y), Z), f(br(Y, Z), X)), f(br(X, Z), Y));
                for (std::size_t s = 0; s < n; ++s)
                    if (!val[s].is_zero()) out.coeff({i, j, k}, s) = val[s];
            }
    return out;
}

} // namespace

Jet::Jet(Algebra base, std::vector<MultilinearMap> terms)
    : base_(std::move(base)), terms_(std::move(terms)) {
    if (terms_.size() > kMaxOrder)
        throw std::invalid_argument("jet order capped at 6");
    for (const auto& t : terms_) {
        if (t.arity() != 2 || t.dim() != base_.dim())
            throw DimensionMismatch("jet term shape mismatch");
    }
    if (!verify(base_).markl_remm)
        throw NotPoisson("jet base fails the defining identity");
}

MultilinearMap Jet::term(std::size_t i) const {
    if (i == 0) return base_.as_bilinear();
    if (i <= terms_.size()) return terms_[i - 1];
    return MultilinearMap(2, base_.dim());
}

Jet Jet::extended_with(MultilinearMap next) const {
    std::vector<MultilinearMap> terms = terms_;
    terms.push_back(std::move(next));
    return Jet(base_, std::move(terms));
}

MultilinearMap dk_residual(const Jet& j, std::size_t k) {
    if (k < 1) throw std::invalid_argument("order must be >= 1");
    const std::size_t n = j.base().dim();
    MultilinearMap acc(3, n);
    const GroupAlgebraElement vP = group_constants::v_P();
    for (std::size_t i = 0; i <= k; ++i) {
        MultilinearMap mi = j.term(i);
        MultilinearMap mj = j.term(k - i);
        if (mi.is_zero() || mj.is_zero()) continue;
        acc += act(vP, comp(1, mi, mj));
        acc -= Rational(3) * comp(2, mi, mj);
    }
    return acc;
}

JetVerification verify_jet(const Jet& j, DeformationKind kind) {
    for (std::size_t i = 1; i <= j.order(); ++i) {
        MultilinearMap t = j.term(i);
        if (kind == DeformationKind::Lie && !is_skew_bilinear(t)) {
            auto parts = sym_skew_parts(t);
            return {false, JetFailure{i, "symmetry", std::move(parts.symmetric)}};
        }
        if (kind == DeformationKind::Associative && !is_symmetric_bilinear(t)) {
            auto parts = sym_skew_parts(t);
            return {false, JetFailure{i, "symmetry", std::move(parts.skew)}};
        }
    }
    for (std::size_t k = 1; k <= j.order(); ++k) {
        MultilinearMap r = dk_residual(j, k);
        if (!r.is_zero()) return {false, JetFailure{k, "dk", std::move(r)}};
    }
    return {true, std::nullopt};
}

ExtendResult extend_jet(const Jet& j, DeformationKind kind) {
    JetVerification pre = verify_jet(j, kind);
    if (!pre.ok) throw std::invalid_argument("extend_jet requires a verified jet");
    const std::size_t n = j.base().dim();
    const std::size_t next = j.order() + 1;

    // D_{next} with the unknown set to zero leaves the lower-order residual R;
    // the unknown contributes exactly delta2_P, so solve delta2_P(x) = -R.
    MultilinearMap lower = dk_residual(j, next);

    SymmetryFilter filter = SymmetryFilter::None;
    if (kind == DeformationKind::Lie) filter = SymmetryFilter::Skew;
    if (kind == DeformationKind::Associative) filter = SymmetryFilter::Symmetric;
    auto domain = cochain_basis(2, n, filter);

    Matrix m = operator_matrix(domain, [&](const MultilinearMap& b) {
        return delta2_P(j.base(), b);
    });
    Vec rhs = vec_scale(Rational(-1), lower.coefficients());
    auto sol = solve_affine(m, rhs);
    if (!sol) return Obstructed{std::move(lower)};

    auto to_map = [&](const Vec& coords) {
        MultilinearMap out(2, n);
        for (std::size_t c = 0; c < coords.size(); ++c)
            if (!coords[c].is_zero()) out += coords[c] * domain[c];
        return out;
    };
    ExtensionSolutions out{to_map(sol->particular), {}, Subspace(n * n * n)};
    std::vector<Vec> ambient;
    for (const Vec& kv : sol->kernel.basis()) {
        MultilinearMap b = to_map(kv);
        ambient.push_back(b.coefficients());
        out.kernel.push_back(std::move(b));
    }
    out.kernel_space = Subspace::from_spanning(n * n * n, ambient);
    return out;
}

Subspace lie_first_order_space(const Algebra& a) {
    require_poisson(a);
    return joint_kernel(a.dim(), SymmetryFilter::Skew,
                        {[&a](const MultilinearMap& m) { return delta2_C(a, m); },
                         [&a](const MultilinearMap& m) { return operator_L1(a, m); }});
}

Subspace assoc_first_order_space(const Algebra& a) {
    require_poisson(a);
    PoissonPair p = split(a);
    return joint_kernel(a.dim(), SymmetryFilter::Symmetric,
                        {[&a](const MultilinearMap& m) { return delta2_H(a, m); },
                         [p](const MultilinearMap& m) { return biderivation_residual(p, m); }});
}

bool is_lie_k_derivation(const PoissonPair& p, const MultilinearMap& psi) {
    if (psi.dim() != p.dim()) throw DimensionMismatch("cochain dim != algebra dim");
    // arity 4 is admitted so images of arity-3 cochains can be tested
    if (psi.arity() > 4) throw std::invalid_argument("Lie k-derivations supported for k <= 4");
    return lie_k_deriv_residual(p, psi).is_zero();
}

Subspace lie_biderivation_space(const PoissonPair& p, SymmetryFilter filter) {
    return joint_kernel(p.dim(), filter,
                        {[p](const MultilinearMap& m) { return biderivation_residual(p, m); }});
}

Subspace ph_cochain_space(const PoissonPair& p, std::size_t k, SymmetryNotion notion) {
    if (k < 1 || k > 3) throw std::invalid_argument("ph_cochain_space supports 1 <= k <= 3");
    const std::size_t n = p.dim();
    auto domain = cochain_basis(k, n);
    std::vector<Vec> cols;
    cols.reserve(domain.size());
    for (const auto& b : domain) {
        Vec col = lie_k_deriv_residual(p, b).coefficients();
        if (notion == SymmetryNotion::VSymmetric) {
            if (k >= 2) { // V_1 degenerates; a 1-linear map is vacuously symmetric
                Vec part = act(group_constants::V(k), b).coefficients();
                col.insert(col.end(), part.begin(), part.end());
            }
        } else {
            const std::size_t kk = k;
            for (std::size_t x = 1; x <= kk; ++x)
                for (std::size_t y = x + 1; y <= kk; ++y) {
                    Vec part = (act(Permutation::transposition(kk, x, y), b) - b).coefficients();
                    col.insert(col.end(), part.begin(), part.end());
                }
        }
        cols.push_back(std::move(col));
    }
    Matrix m(cols[0].size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, c) = cols[c][r];
    // the domain is the full coefficient space, so kernel coordinates are
    // already ambient coordinates
    return kernel_basis(m);
}

PhDeltaReport ph_delta_check(const PoissonPair& p, const MultilinearMap& psi) {
    MultilinearMap image = hochschild_delta(p, psi);
    bool lie = is_lie_k_derivation(p, image);
    bool vsym = is_V_symmetric(image);
    return {std::move(image), lie, vsym};
}

RigidityReport rigidity_probe(const PoissonPair& p) {
    Algebra a = combine(p);
    require_poisson(a);
    Subspace lie = lie_first_order_space(a);
    Subspace assoc = assoc_first_order_space(a);
    Subspace bid = lie_biderivation_space(p);
    return {assoc.dim() == 0, lie.dim(), assoc.dim(), bid.dim()};
}

} // namespace poisson
