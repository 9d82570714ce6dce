#include "poisson/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "poisson/errors.hpp"

namespace poisson {

Permutation::Permutation(std::vector<std::size_t> images_zero_based)
    : img_(std::move(images_zero_based)) {
    std::vector<bool> seen(img_.size(), false);
    for (auto v : img_) {
        if (v >= img_.size() || seen[v])
            throw std::invalid_argument("image array is not a permutation");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t k) {
    std::vector<std::size_t> img(k);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::transposition(std::size_t k, std::size_t a, std::size_t b) {
    if (a < 1 || b < 1 || a > k || b > k || a == b)
        throw std::invalid_argument("bad transposition slots");
    auto p = identity(k);
    std::swap(p.img_[a - 1], p.img_[b - 1]);
    return p;
}

Permutation Permutation::cycle3() {
    return Permutation({1, 2, 0});
}

int Permutation::sign() const {
    int sg = 1;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        std::size_t j = i, len = 0;
        while (!seen[j]) {
            seen[j] = true;
            j = img_[j];
            ++len;
        }
        if (len % 2 == 0) sg = -sg;
    }
    return sg;
}

Permutation Permutation::then(const Permutation& q) const {
    if (arity() != q.arity()) throw DimensionMismatch("permutation arity mismatch");
    std::vector<std::size_t> img(arity());
    for (std::size_t i = 0; i < arity(); ++i) img[i] = q.img_[img_[i]];
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> img(arity());
    for (std::size_t i = 0; i < arity(); ++i) img[img_[i]] = i;
    return Permutation(std::move(img));
}

GroupAlgebraElement::GroupAlgebraElement(const Permutation& p, const Rational& c)
    : arity_(p.arity()) {
    add_term(p, c);
}

void GroupAlgebraElement::add_term(const Permutation& p, const Rational& c) {
    if (p.arity() != arity_) throw DimensionMismatch("group algebra arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational GroupAlgebraElement::coefficient(const Permutation& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational GroupAlgebraElement::coefficient_sum() const {
    Rational s;
    for (const auto& [p, c] : terms_) s += c;
    return s;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
    if (o.arity_ != arity_) throw DimensionMismatch("group algebra arity mismatch");
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
    if (o.arity_ != arity_) throw DimensionMismatch("group algebra arity mismatch");
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

GroupAlgebraElement operator*(const Rational& c, const GroupAlgebraElement& v) {
    GroupAlgebraElement out(v.arity());
    for (const auto& [p, a] : v.terms()) out.add_term(p, c * a);
    return out;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& w, const GroupAlgebraElement& v) {
    if (w.arity() != v.arity()) throw DimensionMismatch("group algebra arity mismatch");
    GroupAlgebraElement out(w.arity());
    for (const auto& [p, a] : w.terms())
        for (const auto& [q, b] : v.terms()) out.add_term(p.then(q), a * b);
    return out;
}

namespace group_constants {

GroupAlgebraElement v_P() {
    GroupAlgebraElement v(3);
    v.add_term(Permutation::identity(3), Rational(3));
    v.add_term(Permutation::transposition(3, 2, 3), Rational(-1));
    v.add_term(Permutation::transposition(3, 1, 2), Rational(1));
    v.add_term(Permutation::cycle3(), Rational(-1));
    v.add_term(Permutation::cycle3().then(Permutation::cycle3()), Rational(1));
    return v;
}

GroupAlgebraElement v_L() {
    return V(3);
}

GroupAlgebraElement V(std::size_t k) {
    if (k < 1 || k > 4) throw std::invalid_argument("V_k supported for 1 <= k <= 4");
    std::vector<std::size_t> img(k);
    std::iota(img.begin(), img.end(), 0);
    GroupAlgebraElement v(k);
    do {
        Permutation p(img);
        v.add_term(p, Rational(p.sign()));
    } while (std::next_permutation(img.begin(), img.end()));
    return v;
}

} // namespace group_constants

} // namespace poisson
