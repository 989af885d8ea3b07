// Spectral decomposition of the transient block and the geometric-mixture
// closed form for the tail:
//   t(n) = sum_i c_i e_i^(n-1),
// where the e_i are the (real, simple) eigenvalues of Q.  Everything here
// is certified: roots are isolated in exact sign-change brackets, refined
// to 60-digit floats, and rejected unless the monic characteristic
// polynomial residual and pairwise gaps meet the tolerances below.
#pragma once

#include "craps/exact.hpp"
#include "craps/polynomial.hpp"

#include <vector>

namespace craps {

// Certification tolerances (60-digit arithmetic leaves orders of magnitude
// of headroom on every one of these).
inline const Real kRootResidualTol = Real("1e-40");   // |p_monic(root)|
inline const Real kEigenvalueGapTol = Real("1e-20");  // min |e_i - e_j|
inline const Real kBracketWidthTol = Real("1e-20");   // bisection stop
inline const Real kIdentityTol = Real("1e-30");       // mixture identities
inline const Real kCrossCheckTol = Real("1e-40");     // independent-formula agreement
inline const Real kResidualVectorTol = Real("1e-30"); // ||P r - e r||_inf

enum class SpectrumMethod { numeric_roots, radical_closed_form };

struct Spectrum {
    std::vector<Real> eigenvalues;  // descending, all in (0, 1)
    SpectrumMethod method = SpectrumMethod::numeric_roots;
    Polynomial<Integer> charpoly;   // primitive, positive leading coefficient
};

struct MixtureTerm {
    Real coefficient;  // c_i
    Real rate;         // e_i
};

struct GeometricMixture {
    std::vector<MixtureTerm> terms;  // rate-descending, matching Spectrum order
};

// det(zI - Q) scaled to coprime integer coefficients with positive leading
// coefficient.  Uses the arrowhead product formula when Q is arrowhead and
// Faddeev-LeVerrier otherwise; for arrowhead inputs the two are
// cross-checked for exact equality.
Polynomial<Integer> characteristic_polynomial(const ChainSpec& chain);

// Bracket endpoints [1, d_1, ..., d_m, 0] (strictly decreasing): the point
// survive probabilities interlace the eigenvalues of Q.  Throws if the
// diagonal entries are not distinct and inside (0, 1).
std::vector<Rational> interlacing_points(const RationalMatrix& q);

// One certified root per bracket (p has exact, strictly alternating signs
// at the given points): bisection to width kBracketWidthTol, Newton polish,
// then residual + gap certification.  Returned descending.  Throws
// std::runtime_error if any certificate fails.
std::vector<Real> certified_roots(const Polynomial<Integer>& p,
                                  const std::vector<Rational>& bracket_points);

// Eigenvalues of Q by certified root-finding on the characteristic
// polynomial.  Works for any compiled game whose point groups have
// distinct survive probabilities.
Spectrum eigenvalues_numeric(const ChainSpec& chain);

// The closed-form radicals for the standard craps chain:
//   alpha = 2 sqrt(9829) cos((1/3) arccos(-710369 / (9829 sqrt(9829)))),
//   e(u,v) = 5/8 + (u/72) sqrt((349 + alpha)/3)
//                + (v/72) sqrt((698 - alpha)/3 - 2136 u sqrt(3/(349 + alpha))).
// Only defined for the merged craps chain (throws std::domain_error
// otherwise); the result is verified against the numeric route.
Spectrum eigenvalues_radical(const ChainSpec& chain);

// Mixture coefficients c_i from the exact tails t(1..k) via a Vandermonde
// solve in the eigenvalue powers.  For the craps chain the c_i are
// cross-checked against the independent closed-form expression
//   c(w; x,y,z) = (-25 + 36w) [4835 - 5580(x+y+z) + 6480(xy+xz+yz) - 7776xyz]
//                 / [38880 (w-x)(w-y)(w-z)]
// evaluated at each eigenvalue against the other three.
GeometricMixture mixture_coefficients(const ChainSpec& chain, const Spectrum& spectrum);

// Closed-form tail sum_i c_i e_i^(n-1).
Real tail_closed_form(const GeometricMixture& mixture, int n);

// Unnormalized eigenvector of the full craps transition matrix P for an
// eigenvalue e of Q, from the polynomial parametrization in x = 36 e:
//   r(x) = [ -5 + x/5,
//            -175 + (581/15) x - (21/10) x^2 + (1/30) x^3,
//            275/2 - (1199/40) x + (8/5) x^2 - (1/40) x^3,
//            1,
//            0 ],
// and the all-ones vector for the unit eigenvalue.  Verified against
// ||P r - e r||_inf < kResidualVectorTol; craps chain only.
RealVector eigenvector(const ChainSpec& chain, const Real& eigenvalue);

struct LeadingTermBound {
    Real bound;  // c_1 e_1^(n-1)
    Real ratio;  // bound / t(n), exact t(n) in the denominator
};

// The first mixture term alone, compared against the exact tail.  The
// bound is strict for every n >= 1 and the ratio decreases to 1.
LeadingTermBound leading_term_bound(const ChainSpec& chain,
                                    const GeometricMixture& mixture, int n);

// Smallest n with c_1 e_1^(n-1) / t(n) < 1 + 10^(-decimal_exponent).
// Throws std::runtime_error if no crossing occurs by n = limit.
int ratio_threshold(const ChainSpec& chain, const GeometricMixture& mixture,
                    int decimal_exponent, int limit = 1000);

}  // namespace craps
