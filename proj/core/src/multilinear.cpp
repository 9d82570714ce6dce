#include "poisson/multilinear.hpp"

#include <array>

#include "poisson/errors.hpp"

namespace poisson {

namespace {

std::size_t pow_sz(std::size_t base, std::size_t e) {
    std::size_t out = 1;
    while (e--) out *= base;
    return out;
}

} // namespace

MultilinearMap::MultilinearMap(std::size_t arity, std::size_t dim)
    : arity_(arity), dim_(dim), coeffs_(pow_sz(dim, arity + 1)) {
    if (arity < 1) throw std::invalid_argument("arity must be >= 1");
    if (dim < 1) throw std::invalid_argument("dim must be >= 1");
}

MultilinearMap::MultilinearMap(std::size_t arity, std::size_t dim, Vec coefficients)
    : arity_(arity), dim_(dim), coeffs_(std::move(coefficients)) {
    if (arity < 1) throw std::invalid_argument("arity must be >= 1");
    if (dim < 1) throw std::invalid_argument("dim must be >= 1");
    if (coeffs_.size() != pow_sz(dim, arity + 1))
        throw DimensionMismatch("coefficient vector has wrong length");
}

std::size_t MultilinearMap::flat_index(std::span<const std::size_t> indices, std::size_t s) const {
    std::size_t idx = 0;
    for (std::size_t v : indices) idx = idx * dim_ + v;
    return idx * dim_ + s;
}

Rational& MultilinearMap::coeff(std::span<const std::size_t> indices, std::size_t s) {
    return coeffs_[flat_index(indices, s)];
}

const Rational& MultilinearMap::coeff(std::span<const std::size_t> indices, std::size_t s) const {
    return coeffs_[flat_index(indices, s)];
}

Rational& MultilinearMap::coeff(std::initializer_list<std::size_t> indices, std::size_t s) {
    return coeff(std::span<const std::size_t>(indices.begin(), indices.size()), s);
}

const Rational& MultilinearMap::coeff(std::initializer_list<std::size_t> indices, std::size_t s) const {
    return coeff(std::span<const std::size_t>(indices.begin(), indices.size()), s);
}

Vec MultilinearMap::on_basis(std::span<const std::size_t> indices) const {
    std::size_t idx = 0;
    for (std::size_t v : indices) idx = idx * dim_ + v;
    Vec out(dim_);
    for (std::size_t s = 0; s < dim_; ++s) out[s] = coeffs_[idx * dim_ + s];
    return out;
}

Vec MultilinearMap::eval(std::span<const Vec> args) const {
    if (args.size() != arity_) throw DimensionMismatch("wrong number of arguments");
    for (const Vec& a : args)
        if (a.size() != dim_) throw DimensionMismatch("argument length != dim");
    Vec out(dim_);
    std::vector<std::size_t> idx(arity_, 0);
    const std::size_t total = pow_sz(dim_, arity_);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rem = flat;
        for (std::size_t a = arity_; a-- > 0;) {
            idx[a] = rem % dim_;
            rem /= dim_;
        }
        Rational factor(1);
        bool zero = false;
        for (std::size_t a = 0; a < arity_; ++a) {
            if (args[a][idx[a]].is_zero()) { zero = true; break; }
            factor *= args[a][idx[a]];
        }
        if (zero) continue;
        for (std::size_t s = 0; s < dim_; ++s) {
            const Rational& c = coeffs_[flat * dim_ + s];
            if (!c.is_zero()) out[s] += factor * c;
        }
    }
    return out;
}

MultilinearMap& MultilinearMap::operator+=(const MultilinearMap& o) {
    if (o.arity_ != arity_ || o.dim_ != dim_) throw DimensionMismatch("map shape mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

MultilinearMap& MultilinearMap::operator-=(const MultilinearMap& o) {
    if (o.arity_ != arity_ || o.dim_ != dim_) throw DimensionMismatch("map shape mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

MultilinearMap operator*(const Rational& c, const MultilinearMap& m) {
    MultilinearMap out(m.arity_, m.dim_);
    for (std::size_t i = 0; i < m.coeffs_.size(); ++i) out.coeffs_[i] = c * m.coeffs_[i];
    return out;
}

MultilinearMap act(const Permutation& sigma, const MultilinearMap& T) {
    if (sigma.arity() != T.arity()) throw DimensionMismatch("permutation arity != map arity");
    const std::size_t k = T.arity(), n = T.dim();
    MultilinearMap out(k, n);
    std::vector<std::size_t> idx(k), src(k);
    const std::size_t total = [&] {
        std::size_t t = 1;
        for (std::size_t a = 0; a < k; ++a) t *= n;
        return t;
    }();
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rem = flat;
        for (std::size_t a = k; a-- > 0;) {
            idx[a] = rem % n;
            rem /= n;
        }
        // out(e_{i1},...,e_{ik}) = T(e_{i_{sigma(1)}},...,e_{i_{sigma(k)}})
        for (std::size_t a = 0; a < k; ++a) src[a] = idx[sigma.apply(a)];
        for (std::size_t s = 0; s < n; ++s) {
            const Rational& c = T.coeff(src, s);
            if (!c.is_zero()) out.coeff(idx, s) = c;
        }
    }
    return out;
}

MultilinearMap act(const GroupAlgebraElement& v, const MultilinearMap& T) {
    if (v.arity() != T.arity()) throw DimensionMismatch("group element arity != map arity");
    MultilinearMap out(T.arity(), T.dim());
    for (const auto& [p, c] : v.terms()) out += c * act(p, T);
    return out;
}

MultilinearMap comp(int i, const MultilinearMap& mu, const MultilinearMap& nu) {
    if (mu.arity() != 2 || nu.arity() != 2)
        throw std::invalid_argument("comp is defined for bilinear maps");
    if (mu.dim() != nu.dim()) throw DimensionMismatch("comp dimension mismatch");
    if (i != 1 && i != 2) throw std::invalid_argument("comp slot must be 1 or 2");
    const std::size_t n = mu.dim();
    MultilinearMap out(3, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t l = 0; l < n; ++l) {
                    // comp1: mu(nu(a,b), c); comp2: mu(a, nu(b,c))
                    const Rational& inner = (i == 1) ? nu.coeff({a, b}, l) : nu.coeff({b, c}, l);
                    if (inner.is_zero()) continue;
                    for (std::size_t s = 0; s < n; ++s) {
                        const Rational& outer = (i == 1) ? mu.coeff({l, c}, s) : mu.coeff({a, l}, s);
                        if (!outer.is_zero()) out.coeff({a, b, c}, s) += inner * outer;
                    }
                }
    return out;
}

MultilinearMap transpose_bilinear(const MultilinearMap& phi) {
    if (phi.arity() != 2) throw std::invalid_argument("transpose is for bilinear maps");
    return act(Permutation::transposition(2, 1, 2), phi);
}

SymSkewParts sym_skew_parts(const MultilinearMap& phi) {
    if (phi.arity() != 2) throw std::invalid_argument("sym_skew_parts is for bilinear maps");
    MultilinearMap t = transpose_bilinear(phi);
    Rational half(1, 2);
    return {half * (phi + t), half * (phi - t)};
}

bool is_symmetric_bilinear(const MultilinearMap& phi) {
    return phi.arity() == 2 && (phi - transpose_bilinear(phi)).is_zero();
}

bool is_skew_bilinear(const MultilinearMap& phi) {
    return phi.arity() == 2 && (phi + transpose_bilinear(phi)).is_zero();
}

bool fully_symmetric(const MultilinearMap& T) {
    const std::size_t k = T.arity();
    if (k > 4) throw std::invalid_argument("symmetry predicates support arity <= 4");
    for (std::size_t a = 1; a < k; ++a)
        for (std::size_t b = a + 1; b <= k; ++b)
            if (!(act(Permutation::transposition(k, a, b), T) - T).is_zero()) return false;
    return true;
}

bool is_V_symmetric(const MultilinearMap& T) {
    const std::size_t k = T.arity();
    if (k > 4) throw std::invalid_argument("symmetry predicates support arity <= 4");
    return act(group_constants::V(k), T).is_zero();
}

std::vector<MultilinearMap> cochain_basis(std::size_t arity, std::size_t dim,
                                          SymmetryFilter filter) {
    std::vector<MultilinearMap> out;
    const std::size_t n = dim;
    if (filter == SymmetryFilter::None) {
        MultilinearMap proto(arity, dim);
        const std::size_t total = proto.coefficients().size();
        for (std::size_t flat = 0; flat < total; ++flat) {
            Vec c(total);
            c[flat] = Rational(1);
            out.push_back(MultilinearMap::from_coefficients(arity, dim, std::move(c)));
        }
        return out;
    }
    if (arity != 2)
        throw std::invalid_argument("symmetric/skew slices are defined for bilinear maps");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t s = 0; s < n; ++s) {
                if (filter == SymmetryFilter::Symmetric) {
                    MultilinearMap m(2, n);
                    m.coeff({i, j}, s) = Rational(1);
                    if (i != j) m.coeff({j, i}, s) = Rational(1);
                    out.push_back(std::move(m));
                } else {
                    if (i == j) continue;
                    MultilinearMap m(2, n);
                    m.coeff({i, j}, s) = Rational(1);
                    m.coeff({j, i}, s) = Rational(-1);
                    out.push_back(std::move(m));
                }
            }
    return out;
}

} // namespace poisson
