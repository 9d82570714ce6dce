#ifndef POISSON_LINALG_HPP
#define POISSON_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "poisson/rational.hpp"

namespace poisson {

using Vec = std::vector<Rational>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& v);
bool vec_is_zero(const Vec& v);

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, Vec entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }

    Vec apply(const Vec& x) const;

    /// In-place reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> rref();

    std::size_t rank() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    Vec entries_;
};

/// A linear subspace of Q^ambient, stored as a canonical (RREF) basis.
/// Canonical form makes equality of subspaces a plain basis comparison.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    /// Canonicalizes an arbitrary spanning set.
    static Subspace from_spanning(std::size_t ambient_dim, const std::vector<Vec>& vectors);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }

private:
    std::size_t ambient_ = 0;
    std::vector<Vec> basis_; // RREF rows, nonzero, in pivot order
};

/// Exact nullspace {v : m v = 0} with canonical basis.
Subspace kernel_basis(const Matrix& m);

struct AffineSolution {
    Vec particular;   // free variables set to 0 in column order
    Subspace kernel;  // kernel_basis(m)
};

/// Solves m x = rhs exactly; nullopt means the system is inconsistent.
std::optional<AffineSolution> solve_affine(const Matrix& m, const Vec& rhs);

/// Exact intersection of two subspaces of the same ambient space.
Subspace intersect(const Subspace& a, const Subspace& b);

} // namespace poisson

#endif
