#include "poisson/linalg.hpp"

#include <algorithm>

#include "poisson/errors.hpp"

namespace poisson {

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vec vec_scale(const Rational& c, const Vec& v) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Vec entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw DimensionMismatch("matrix entries length != rows*cols");
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    Vec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational acc;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!at(r, c).is_zero() && !x[c].is_zero()) acc += at(r, c) * x[c];
        }
        out[r] = acc;
    }
    return out;
}

std::vector<std::size_t> Matrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = rows_;
        for (std::size_t i = r; i < rows_; ++i) {
            if (!at(i, c).is_zero()) { piv = i; break; }
        }
        if (piv == rows_) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(r, j), at(piv, j));
        }
        Rational inv = Rational(1) / at(r, c);
        for (std::size_t j = c; j < cols_; ++j) at(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || at(i, c).is_zero()) continue;
            Rational f = at(i, c);
            for (std::size_t j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix copy = *this;
    return copy.rref().size();
}

Subspace Subspace::from_spanning(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
    Matrix m(vectors.size(), ambient_dim);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient_dim)
            throw DimensionMismatch("spanning vector length != ambient dim");
        for (std::size_t j = 0; j < ambient_dim; ++j) m.at(i, j) = vectors[i][j];
    }
    auto pivots = m.rref();
    Subspace s(ambient_dim);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        Vec row(ambient_dim);
        for (std::size_t j = 0; j < ambient_dim; ++j) row[j] = m.at(i, j);
        s.basis_.push_back(std::move(row));
    }
    return s;
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector length != ambient dim");
    // reduce v against the RREF basis; contained iff the remainder is zero
    Vec rem = v;
    for (const Vec& b : basis_) {
        std::size_t lead = 0;
        while (lead < ambient_ && b[lead].is_zero()) ++lead;
        if (lead == ambient_) continue;
        if (!rem[lead].is_zero()) {
            Rational f = rem[lead]; // basis rows have leading 1
            for (std::size_t j = lead; j < ambient_; ++j) rem[j] -= f * b[j];
        }
    }
    return vec_is_zero(rem);
}

Subspace kernel_basis(const Matrix& m) {
    Matrix red = m;
    auto pivots = red.rref();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<Vec> vecs;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red.at(r, f);
        vecs.push_back(std::move(v));
    }
    return Subspace::from_spanning(m.cols(), vecs);
}

std::optional<AffineSolution> solve_affine(const Matrix& m, const Vec& rhs) {
    if (rhs.size() != m.rows()) throw DimensionMismatch("rhs length != rows");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = rhs[r];
    }
    auto pivots = aug.rref();
    for (auto c : pivots) {
        if (c == m.cols()) return std::nullopt;
    }
    Vec particular(m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        particular[pivots[r]] = aug.at(r, m.cols());
    return AffineSolution{std::move(particular), kernel_basis(m)};
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("subspace ambient dims differ");
    const std::size_t n = a.ambient_dim();
    const std::size_t da = a.dim(), db = b.dim();
    if (da == 0 || db == 0) return Subspace(n);
    // x in both spaces: x = A^T alpha = B^T beta; solve [A^T | -B^T] null, read A^T alpha
    Matrix m(n, da + db);
    for (std::size_t j = 0; j < da; ++j)
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = a.basis()[j][i];
    for (std::size_t j = 0; j < db; ++j)
        for (std::size_t i = 0; i < n; ++i) m.at(i, da + j) = -b.basis()[j][i];
    Subspace null = kernel_basis(m);
    std::vector<Vec> vecs;
    for (const Vec& coeffs : null.basis()) {
        Vec x(n);
        for (std::size_t j = 0; j < da; ++j) {
            if (coeffs[j].is_zero()) continue;
            for (std::size_t i = 0; i < n; ++i) x[i] += coeffs[j] * a.basis()[j][i];
        }
        vecs.push_back(std::move(x));
    }
    return Subspace::from_spanning(n, vecs);
}

} // namespace poisson
