#ifndef POISSON_PERMUTATION_HPP
#define POISSON_PERMUTATION_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "poisson/rational.hpp"

namespace poisson {

/// A permutation of {1..k}, stored as the 0-based image array.
/// Composition convention is diagrammatic: (p.then(q))(i) = q(p(i)).
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> images_zero_based);

    static Permutation identity(std::size_t k);
    /// Transposition of slots a and b (1-based, matching the tau_ab naming).
    static Permutation transposition(std::size_t k, std::size_t a, std::size_t b);
    /// The 3-cycle (1,2,3): slot 1 -> 2 -> 3 -> 1.
    static Permutation cycle3();

    std::size_t arity() const { return img_.size(); }
    std::size_t apply(std::size_t i) const { return img_[i]; } // 0-based
    int sign() const;

    Permutation then(const Permutation& q) const;
    Permutation inverse() const;

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

    const std::vector<std::size_t>& images() const { return img_; }

private:
    std::vector<std::size_t> img_;
};

/// Element of the rational group algebra of Sigma_k: finite sum of
/// permutations with nonzero rational coefficients.
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(std::size_t arity) : arity_(arity) {}
    GroupAlgebraElement(const Permutation& p, const Rational& c = Rational(1));

    std::size_t arity() const { return arity_; }
    const std::map<Permutation, Rational>& terms() const { return terms_; }

    void add_term(const Permutation& p, const Rational& c);
    Rational coefficient(const Permutation& p) const;
    Rational coefficient_sum() const;

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
    friend GroupAlgebraElement operator*(const Rational& c, const GroupAlgebraElement& v);
    /// Group-algebra product compatible with act(): act(v, act(w, T)) = act(w * v, T).
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& w, const GroupAlgebraElement& v);

    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

private:
    std::size_t arity_;
    std::map<Permutation, Rational> terms_; // no zero coefficients stored
};

namespace group_constants {

/// v_P = 3 Id - tau23 + tau12 - c + c^2 (the defining-identity element).
GroupAlgebraElement v_P();
/// v_L = Id - tau12 - tau13 - tau23 + c + c^2 (total alternation on Sigma_3).
GroupAlgebraElement v_L();
/// V_k = sum over Sigma_k of sign(sigma) sigma, for 1 <= k <= 4.
GroupAlgebraElement V(std::size_t k);

} // namespace group_constants

} // namespace poisson

#endif
