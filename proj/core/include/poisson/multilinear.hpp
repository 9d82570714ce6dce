#ifndef POISSON_MULTILINEAR_HPP
#define POISSON_MULTILINEAR_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "poisson/linalg.hpp"
#include "poisson/permutation.hpp"
#include "poisson/rational.hpp"

namespace poisson {

/// A k-linear map K^n x ... x K^n -> K^n given by its coefficients on the
/// standard basis: T(e_{i1},...,e_{ik}) = sum_s c[i1,...,ik; s] e_s.
/// Coefficients are stored flat in lexicographic (i1,...,ik,s) order.
class MultilinearMap {
public:
    MultilinearMap(std::size_t arity, std::size_t dim);
    MultilinearMap(std::size_t arity, std::size_t dim, Vec coefficients);

    std::size_t arity() const { return arity_; }
    std::size_t dim() const { return dim_; }

    /// Coefficient c[indices; s], indices 0-based of length arity.
    Rational& coeff(std::span<const std::size_t> indices, std::size_t s);
    const Rational& coeff(std::span<const std::size_t> indices, std::size_t s) const;
    Rational& coeff(std::initializer_list<std::size_t> indices, std::size_t s);
    const Rational& coeff(std::initializer_list<std::size_t> indices, std::size_t s) const;

    /// Value on basis arguments, as a coefficient vector.
    Vec on_basis(std::span<const std::size_t> indices) const;
    /// Value on arbitrary coefficient vectors.
    Vec eval(std::span<const Vec> args) const;

    bool is_zero() const { return vec_is_zero(coeffs_); }

    MultilinearMap& operator+=(const MultilinearMap& o);
    MultilinearMap& operator-=(const MultilinearMap& o);
    friend MultilinearMap operator+(MultilinearMap a, const MultilinearMap& b) { return a += b; }
    friend MultilinearMap operator-(MultilinearMap a, const MultilinearMap& b) { return a -= b; }
    friend MultilinearMap operator*(const Rational& c, const MultilinearMap& m);
    friend bool operator==(const MultilinearMap& a, const MultilinearMap& b) {
        return a.arity_ == b.arity_ && a.dim_ == b.dim_ && a.coeffs_ == b.coeffs_;
    }

    /// Flat coefficient vector, length dim^(arity+1).
    const Vec& coefficients() const { return coeffs_; }
    static MultilinearMap from_coefficients(std::size_t arity, std::size_t dim, Vec coeffs) {
        return MultilinearMap(arity, dim, std::move(coeffs));
    }

private:
    std::size_t flat_index(std::span<const std::size_t> indices, std::size_t s) const;

    std::size_t arity_, dim_;
    Vec coeffs_;
};

/// Argument-permutation action: act(sigma, T)(x1,...,xk) = T(x_{sigma(1)},...,x_{sigma(k)}),
/// extended linearly over the group algebra. Satisfies act(v, act(w, T)) = act(w*v, T).
MultilinearMap act(const Permutation& sigma, const MultilinearMap& T);
MultilinearMap act(const GroupAlgebraElement& v, const MultilinearMap& T);

/// comp-i insertions of bilinear maps:
///   comp(1, mu, nu)(x,y,z) = mu(nu(x,y), z)
///   comp(2, mu, nu)(x,y,z) = mu(x, nu(y,z))
MultilinearMap comp(int i, const MultilinearMap& mu, const MultilinearMap& nu);

/// phi~(x,y) = phi(y,x) for bilinear maps.
MultilinearMap transpose_bilinear(const MultilinearMap& phi);

struct SymSkewParts {
    MultilinearMap symmetric;
    MultilinearMap skew;
};
/// phi_s = (phi + phi~)/2, phi_a = (phi - phi~)/2.
SymSkewParts sym_skew_parts(const MultilinearMap& phi);

bool is_symmetric_bilinear(const MultilinearMap& phi);
bool is_skew_bilinear(const MultilinearMap& phi);

/// Invariance under every argument transposition (k <= 4).
bool fully_symmetric(const MultilinearMap& T);
/// The signed condition act(V_k, T) = 0 (k <= 4). Strictly weaker than
/// fully_symmetric for k >= 3.
bool is_V_symmetric(const MultilinearMap& T);

/// Standard basis of the space of arity-k maps, or of its symmetric/skew
/// slice for k = 2. Order is deterministic.
enum class SymmetryFilter { None, Symmetric, Skew };
std::vector<MultilinearMap> cochain_basis(std::size_t arity, std::size_t dim,
                                          SymmetryFilter filter = SymmetryFilter::None);

} // namespace poisson

#endif
