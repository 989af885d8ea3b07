// Dense univariate polynomials plus exact characteristic polynomials of
// rational matrices.  Coefficients are stored in ascending order; the zero
// polynomial has an empty coefficient vector and degree -1.
#pragma once

#include "craps/numeric.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace craps {

template <typename Scalar>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Scalar> ascending_coeffs)
        : c_(std::move(ascending_coeffs)) {
        trim();
    }
    static Polynomial constant(Scalar value) {
        return Polynomial(std::vector<Scalar>{std::move(value)});
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Scalar>& coeffs() const { return c_; }
    const Scalar& operator[](std::size_t k) const { return c_.at(k); }
    const Scalar& leading() const { return c_.back(); }

    // Horner evaluation in any arithmetic type the coefficients convert to.
    template <typename X>
    X operator()(const X& x) const {
        X acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<Scalar> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Scalar(k) * c_[k];
        return Polynomial(std::move(d));
    }

    template <typename To>
    Polynomial<To> cast() const {
        std::vector<To> d;
        d.reserve(c_.size());
        for (const Scalar& v : c_) d.push_back(To(v));
        return Polynomial<To>(std::move(d));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Scalar& s) {
        for (Scalar& v : c_) v *= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Scalar> prod(a.c_.size() + b.c_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                prod[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(prod));
    }
    friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
    friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }

    bool operator==(const Polynomial&) const = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
    }
    std::vector<Scalar> c_;
};

// An arrowhead matrix is dense in its first row and first column and
// diagonal elsewhere; compiled point-game chains have this shape.
bool is_arrowhead(const RationalMatrix& m);

// det(zI - M) for an arrowhead matrix, via the rank-one bordering identity:
//   p(z) = (z - d0) * prod_i (z - d_i) - sum_i b_i c_i * prod_{j != i} (z - d_j).
// Throws std::invalid_argument if the matrix is not arrowhead.
Polynomial<Rational> arrowhead_charpoly(const RationalMatrix& m);

// det(zI - M) for any square rational matrix (Faddeev-LeVerrier).  Exact but
// O(n^4); used to cross-check the arrowhead route.
Polynomial<Rational> leverrier_charpoly(const RationalMatrix& m);

// Clear denominators and divide by the content, then normalize the leading
// coefficient to be positive: the unique primitive integer polynomial with
// the same roots.
Polynomial<Integer> primitive_integer_poly(const Polynomial<Rational>& p);

}  // namespace craps
