#include "craps/polynomial.hpp"

namespace craps {

bool is_arrowhead(const RationalMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0) return false;
    for (Eigen::Index i = 1; i < m.rows(); ++i)
        for (Eigen::Index j = 1; j < m.cols(); ++j)
            if (i != j && m(i, j) != 0) return false;
    return true;
}

Polynomial<Rational> arrowhead_charpoly(const RationalMatrix& m) {
    if (!is_arrowhead(m))
        throw std::invalid_argument("matrix is not arrowhead (dense first row/column, diagonal elsewhere)");
    const Eigen::Index n = m.rows();
    // Linear factors (z - d_i), i >= 1.
    std::vector<Polynomial<Rational>> factor;
    factor.reserve(n - 1);
    for (Eigen::Index i = 1; i < n; ++i)
        factor.emplace_back(std::vector<Rational>{-m(i, i), Rational(1)});

    Polynomial<Rational> all = Polynomial<Rational>::constant(Rational(1));
    for (const auto& f : factor) all = all * f;

    Polynomial<Rational> p =
        Polynomial<Rational>(std::vector<Rational>{-m(0, 0), Rational(1)}) * all;
    for (Eigen::Index i = 1; i < n; ++i) {
        const Rational weight = m(0, i) * m(i, 0);
        if (weight == 0) continue;
        Polynomial<Rational> rest = Polynomial<Rational>::constant(Rational(1));
        for (Eigen::Index j = 1; j < n; ++j)
            if (j != i) rest = rest * factor[static_cast<std::size_t>(j - 1)];
        p -= weight * rest;
    }
    return p;
}

Polynomial<Rational> leverrier_charpoly(const RationalMatrix& a) {
    if (a.rows() != a.cols() || a.rows() == 0)
        throw std::invalid_argument("characteristic polynomial needs a nonempty square matrix");
    const Eigen::Index n = a.rows();
    std::vector<Rational> coeff(static_cast<std::size_t>(n) + 1, Rational(0));
    coeff[static_cast<std::size_t>(n)] = 1;
    RationalMatrix m = RationalMatrix::Identity(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        const RationalMatrix am = a * m;
        Rational c = -am.trace() / Rational(k);
        coeff[static_cast<std::size_t>(n - k)] = c;
        m = am + c * RationalMatrix::Identity(n, n);
    }
    return Polynomial<Rational>(std::move(coeff));
}

Polynomial<Integer> primitive_integer_poly(const Polynomial<Rational>& p) {
    if (p.is_zero()) return Polynomial<Integer>();
    Integer den_lcm = 1;
    for (const Rational& c : p.coeffs()) den_lcm = mp::lcm(den_lcm, denominator(c));
    std::vector<Integer> scaled;
    scaled.reserve(p.coeffs().size());
    Integer content = 0;
    for (const Rational& c : p.coeffs()) {
        Integer v = numerator(c) * (den_lcm / denominator(c));
        content = mp::gcd(content, v);
        scaled.push_back(std::move(v));
    }
    const bool flip = scaled.back() < 0;
    for (Integer& v : scaled) {
        v /= content;
        if (flip) v = -v;
    }
    return Polynomial<Integer>(std::move(scaled));
}

}  // namespace craps
