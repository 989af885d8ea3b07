#include "craps/spectral.hpp"

#include <stdexcept>

namespace craps {

namespace {

int sign_of(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

bool is_craps_chain(const ChainSpec& chain) {
    static const ChainSpec canonical = compile_chain(craps_game());
    if (chain.states != canonical.states) return false;
    if (chain.transition.rows() != canonical.transition.rows()) return false;
    for (Eigen::Index i = 0; i < chain.transition.rows(); ++i)
        for (Eigen::Index j = 0; j < chain.transition.cols(); ++j)
            if (chain.transition(i, j) != canonical.transition(i, j)) return false;
    return true;
}

void require_craps(const ChainSpec& chain, const char* what) {
    if (!is_craps_chain(chain))
        throw std::domain_error(std::string(what) +
                                " is only defined for the merged standard craps chain");
}

Real monic_residual(const Polynomial<Integer>& p, const Real& x) {
    return abs(p(x)) / Real(p.leading());
}

// c(w; x,y,z): closed-form craps mixture coefficient for the eigenvalue w
// given the other three eigenvalues.
Real craps_coefficient_formula(const Real& w, const Real& x, const Real& y, const Real& z) {
    const Real num = (Real(-25) + 36 * w) *
                     (Real(4835) - 5580 * (x + y + z) + 6480 * (x * y + x * z + y * z) -
                      7776 * x * y * z);
    const Real den = Real(38880) * (w - x) * (w - y) * (w - z);
    return num / den;
}

}  // namespace

Polynomial<Integer> characteristic_polynomial(const ChainSpec& chain) {
    const RationalMatrix& q = chain.transient;
    Polynomial<Rational> p = leverrier_charpoly(q);
    if (is_arrowhead(q) && arrowhead_charpoly(q) != p)
        throw std::runtime_error("charpoly cross-check failed: arrowhead formula "
                                 "disagrees with Faddeev-LeVerrier");
    return primitive_integer_poly(p);
}

std::vector<Rational> interlacing_points(const RationalMatrix& q) {
    if (q.rows() != q.cols() || q.rows() < 1)
        throw std::invalid_argument("interlacing points need a nonempty square matrix");
    std::vector<Rational> points;
    points.emplace_back(1);
    for (Eigen::Index i = 1; i < q.rows(); ++i) {
        const Rational& d = q(i, i);
        if (d <= 0 || d >= 1)
            throw std::domain_error("survive probability outside (0,1); no interlacing bracket");
        if (d >= points.back())
            throw std::domain_error("survive probabilities are not distinct and descending; "
                                    "eigenvalues are not guaranteed simple");
        points.push_back(d);
    }
    points.emplace_back(0);
    return points;
}

std::vector<Real> certified_roots(const Polynomial<Integer>& p,
                                  const std::vector<Rational>& bracket_points) {
    if (bracket_points.size() < 2)
        throw std::invalid_argument("need at least two bracket points");
    if (p.degree() != static_cast<int>(bracket_points.size()) - 1)
        throw std::invalid_argument("bracket count does not match polynomial degree");

    // Exact sign alternation at the bracket points isolates one simple
    // root per interval; this is the certificate everything else rests on.
    std::vector<int> signs;
    for (const Rational& pt : bracket_points) {
        const int s = sign_of(p(pt));
        if (s == 0)
            throw std::runtime_error("interlacing certificate failed: polynomial vanishes "
                                     "at a bracket point");
        if (!signs.empty() && s == signs.back())
            throw std::runtime_error("interlacing certificate failed: no sign change "
                                     "across a bracket");
        signs.push_back(s);
    }

    const Polynomial<Integer> dp = p.derivative();
    std::vector<Real> roots;
    for (std::size_t k = 0; k + 1 < bracket_points.size(); ++k) {
        // bracket_points descend: [lo, hi] = [points[k+1], points[k]].
        Real hi = Real(bracket_points[k]);
        Real lo = Real(bracket_points[k + 1]);
        const int sign_hi = signs[k];
        while (hi - lo > kBracketWidthTol) {
            const Real mid = (hi + lo) / 2;
            const Real val = p(mid);
            if (val == 0) { hi = mid; lo = mid; break; }
            if ((val > 0 ? 1 : -1) == sign_hi) hi = mid; else lo = mid;
        }
        Real x = (hi + lo) / 2;
        for (int iter = 0; iter < 50; ++iter) {
            const Real deriv = dp(x);
            if (deriv == 0) break;
            const Real step = p(x) / deriv;
            Real next = x - step;
            if (next < lo) next = lo;
            if (next > hi) next = hi;
            const bool converged = abs(step) < Real("1e-55") * (1 + abs(x));
            x = next;
            if (converged) break;
        }
        if (monic_residual(p, x) >= kRootResidualTol)
            throw std::runtime_error("root certification failed: monic residual above tolerance");
        roots.push_back(x);
    }
    for (std::size_t k = 0; k + 1 < roots.size(); ++k)
        if (roots[k] - roots[k + 1] < kEigenvalueGapTol)
            throw std::runtime_error("root certification failed: eigenvalue gap below tolerance");
    return roots;
}

Spectrum eigenvalues_numeric(const ChainSpec& chain) {
    Spectrum s;
    s.method = SpectrumMethod::numeric_roots;
    s.charpoly = characteristic_polynomial(chain);
    s.eigenvalues = certified_roots(s.charpoly, interlacing_points(chain.transient));
    return s;
}

Spectrum eigenvalues_radical(const ChainSpec& chain) {
    require_craps(chain, "the radical eigenvalue form");

    const Real s9829 = sqrt(Real(9829));
    const Real alpha = 2 * s9829 * cos(acos(Real(-710369) / (9829 * s9829)) / 3);
    const auto root = [&alpha](int u, int v) {
        const Real inner = (Real(698) - alpha) / 3 - 2136 * u * sqrt(3 / (Real(349) + alpha));
        return Real(5) / 8 + Real(u) / 72 * sqrt((Real(349) + alpha) / 3) +
               Real(v) / 72 * sqrt(inner);
    };

    Spectrum s;
    s.method = SpectrumMethod::radical_closed_form;
    s.charpoly = characteristic_polynomial(chain);
    s.eigenvalues = {root(1, 1), root(1, -1), root(-1, 1), root(-1, -1)};

    for (std::size_t k = 0; k < s.eigenvalues.size(); ++k) {
        if (monic_residual(s.charpoly, s.eigenvalues[k]) >= kRootResidualTol)
            throw std::runtime_error("radical eigenvalue failed the charpoly residual check");
        if (k > 0 && s.eigenvalues[k - 1] <= s.eigenvalues[k])
            throw std::runtime_error("radical eigenvalues are not in descending order");
    }
    const Spectrum numeric = eigenvalues_numeric(chain);
    for (std::size_t k = 0; k < s.eigenvalues.size(); ++k)
        if (abs(s.eigenvalues[k] - numeric.eigenvalues[k]) >= kIdentityTol)
            throw std::runtime_error("radical eigenvalues disagree with certified numeric roots");
    return s;
}

GeometricMixture mixture_coefficients(const ChainSpec& chain, const Spectrum& spectrum) {
    const Eigen::Index s = static_cast<Eigen::Index>(spectrum.eigenvalues.size());
    if (s != chain.transient.rows())
        throw std::invalid_argument("spectrum size does not match the transient block");
    for (Eigen::Index i = 0; i + 1 < s; ++i)
        if (spectrum.eigenvalues[static_cast<std::size_t>(i)] -
                spectrum.eigenvalues[static_cast<std::size_t>(i + 1)] < kEigenvalueGapTol)
            throw std::runtime_error("eigenvalue gap below tolerance; Vandermonde solve "
                                     "would be ill-conditioned");

    // Power sums against exact tails: row k says sum_i c_i e_i^k = t(k+1).
    const TailTable tails = tail_table(chain, static_cast<int>(s));
    RealMatrix vand(s, s);
    RealVector rhs(s);
    for (Eigen::Index k = 0; k < s; ++k) {
        for (Eigen::Index i = 0; i < s; ++i)
            vand(k, i) = pow(spectrum.eigenvalues[static_cast<std::size_t>(i)],
                             static_cast<int>(k));
        rhs(k) = to_real(tails.at(static_cast<int>(k) + 1));
    }
    const RealVector coeff = Eigen::PartialPivLU<RealMatrix>(vand).solve(rhs);

    GeometricMixture mix;
    Real sum_c = 0, sum_ce = 0;
    for (Eigen::Index i = 0; i < s; ++i) {
        const Real& e = spectrum.eigenvalues[static_cast<std::size_t>(i)];
        mix.terms.push_back(MixtureTerm{coeff(i), e});
        sum_c += coeff(i);
        sum_ce += coeff(i) * e;
    }
    if (abs(sum_c - 1) >= kIdentityTol || abs(sum_ce - 1) >= kIdentityTol)
        throw std::runtime_error("mixture identities sum(c) = sum(c e) = 1 failed");

    if (is_craps_chain(chain)) {
        for (Eigen::Index i = 0; i < s; ++i) {
            std::vector<Real> others;
            for (Eigen::Index j = 0; j < s; ++j)
                if (j != i) others.push_back(spectrum.eigenvalues[static_cast<std::size_t>(j)]);
            const Real direct = craps_coefficient_formula(
                spectrum.eigenvalues[static_cast<std::size_t>(i)], others[0], others[1],
                others[2]);
            if (abs(direct - coeff(i)) >= kCrossCheckTol)
                throw std::runtime_error("mixture coefficients disagree with the "
                                         "closed-form expression");
        }
    }
    return mix;
}

Real tail_closed_form(const GeometricMixture& mixture, int n) {
    if (n < 1) throw std::invalid_argument("hand length index n must be >= 1");
    Real sum = 0;
    for (const MixtureTerm& term : mixture.terms)
        sum += term.coefficient * pow(term.rate, n - 1);
    return sum;
}

RealVector eigenvector(const ChainSpec& chain, const Real& eigenvalue) {
    require_craps(chain, "the eigenvector parametrization");
    const Eigen::Index n = chain.transition.rows();
    RealVector r(n);
    if (eigenvalue == 1) {
        r.setOnes();
        return r;
    }
    using RP = Polynomial<Rational>;
    static const std::vector<RP> components = {
        RP({Rational(-5), Rational(1, 5)}),
        RP({Rational(-175), Rational(581, 15), Rational(-21, 10), Rational(1, 30)}),
        RP({Rational(275, 2), Rational(-1199, 40), Rational(8, 5), Rational(-1, 40)}),
        RP::constant(Rational(1)),
        RP()};
    const Real x = 36 * eigenvalue;
    for (Eigen::Index i = 0; i < n; ++i)
        r(i) = components[static_cast<std::size_t>(i)](x);

    RealMatrix p(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) p(i, j) = to_real(chain.transition(i, j));
    const Real residual = (p * r - eigenvalue * r).cwiseAbs().maxCoeff();
    if (residual >= kResidualVectorTol)
        throw std::runtime_error("eigenvector residual above tolerance");
    return r;
}

LeadingTermBound leading_term_bound(const ChainSpec& chain, const GeometricMixture& mixture,
                                    int n) {
    if (n < 1) throw std::invalid_argument("hand length index n must be >= 1");
    if (mixture.terms.empty()) throw std::invalid_argument("empty mixture");
    const Real bound = mixture.terms[0].coefficient * pow(mixture.terms[0].rate, n - 1);
    const Real exact = to_real(tail_matrix_power(chain, n));
    return LeadingTermBound{bound, bound / exact};
}

int ratio_threshold(const ChainSpec& chain, const GeometricMixture& mixture,
                    int decimal_exponent, int limit) {
    if (mixture.terms.empty()) throw std::invalid_argument("empty mixture");
    const Real threshold = 1 + pow(Real(10), -decimal_exponent);
    const TailTable tails = tail_table(chain, limit);
    const Real c1 = mixture.terms[0].coefficient;
    const Real e1 = mixture.terms[0].rate;
    Real lead = c1;  // c_1 e_1^(n-1) at n = 1
    for (int n = 1; n <= limit; ++n) {
        if (lead / to_real(tails.at(n)) < threshold) return n;
        lead *= e1;
    }
    throw std::runtime_error("leading-term ratio did not reach the threshold within the scan limit");
}

}  // namespace craps
