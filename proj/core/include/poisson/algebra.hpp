#ifndef POISSON_ALGEBRA_HPP
#define POISSON_ALGEBRA_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "poisson/linalg.hpp"
#include "poisson/multilinear.hpp"

namespace poisson {

/// A finite-dimensional algebra given by the structure constants of one
/// bilinear product: mu0(e_i, e_j) = sum_k Gamma_ij^k e_k.
class Algebra {
public:
    explicit Algebra(MultilinearMap product);
    Algebra(std::size_t dim) : product_(2, dim) {}

    std::size_t dim() const { return product_.dim(); }
    const MultilinearMap& as_bilinear() const { return product_; }

    Rational& gamma(std::size_t i, std::size_t j, std::size_t k) { return product_.coeff({i, j}, k); }
    const Rational& gamma(std::size_t i, std::size_t j, std::size_t k) const {
        return product_.coeff({i, j}, k);
    }

    Vec product(const Vec& x, const Vec& y) const;

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.product_ == b.product_;
    }

private:
    MultilinearMap product_;
};

/// The pair presentation: a symmetric product (bullet) and a skew bracket.
/// Construction enforces the tensor symmetries.
class PoissonPair {
public:
    PoissonPair(MultilinearMap bullet, MultilinearMap bracket);

    std::size_t dim() const { return bullet_.dim(); }
    const MultilinearMap& bullet() const { return bullet_; }
    const MultilinearMap& bracket() const { return bracket_; }

    Vec bullet_product(const Vec& x, const Vec& y) const;
    Vec bracket_product(const Vec& x, const Vec& y) const;

    friend bool operator==(const PoissonPair& a, const PoissonPair& b) {
        return a.bullet_ == b.bullet_ && a.bracket_ == b.bracket_;
    }

private:
    MultilinearMap bullet_, bracket_;
};

/// xy = x.y + {x,y}
Algebra combine(const PoissonPair& p);
/// x.y = (xy + yx)/2, {x,y} = (xy - yx)/2
PoissonPair split(const Algebra& a);

struct AxiomWitness {
    std::string axiom;                    // "associative", "jacobi", "leibniz", "markl_remm"
    std::size_t i = 0, j = 0, k = 0;      // 0-based basis triple
    Vec residual;
};

struct AxiomReport {
    bool commutative = false;
    bool associative = false;
    bool jacobi = false;
    bool leibniz = false;
    bool markl_remm = false;
    std::vector<AxiomWitness> witnesses;

    bool pair_axioms_ok() const { return commutative && associative && jacobi && leibniz; }
    bool all_ok() const { return pair_axioms_ok() && markl_remm; }
};

AxiomReport verify(const Algebra& a);
AxiomReport verify(const PoissonPair& p);

/// Residual of the defining nonassociative identity at a basis triple,
/// oriented as (xz)y + (yz)x - (yx)z - (zx)y - 3A(x,y,z).
Vec markl_remm_residual(const Algebra& a, std::size_t i, std::size_t j, std::size_t k);

/// A(x,y,z) = (xy)z - x(yz)
Vec associator(const Algebra& a, const Vec& x, const Vec& y, const Vec& z);

enum class AnnihilatorSide { TwoSided, Left, Right };

/// {X : mu0(X, e_j) = 0 and mu0(e_j, X) = 0 for all j} (two-sided default;
/// one-sided variants select a single condition).
Subspace annihilator(const Algebra& a, AnnihilatorSide side = AnnihilatorSide::TwoSided);

/// Requires e.e = e; true iff {e, e_j} = 0 for all j.
bool idempotent_central_check(const PoissonPair& p, const Vec& e);

} // namespace poisson

#endif
