#include "craps/spectral.hpp"

#include <doctest.h>

using namespace craps;

namespace {

const char* kCrapsEigen18[] = {"0.862473751659322030", "0.741708271459795977",
                               "0.709206775794379015", "0.186611201086502979"};
const char* kCrapsCoeff18[] = {"1.211844812464518572", "-0.006375542263784777",
                               "-0.004042671248651503", "-0.201426598952082292"};
const char* kCraplessEigen18[] = {"0.852328117375288754", "0.802690382383309693",
                                  "0.771569023386878517", "0.740353863233155606",
                                  "0.708393182474965932", "0.041332097813068165"};
const char* kCraplessCoeff18[] = {"1.227376609420398489", "-0.025772364974224445",
                                  "-0.012914405003825541", "-0.007214879335522824",
                                  "-0.003948222936746750", "-0.177526737170078930"};

}  // namespace

TEST_CASE("integer characteristic polynomials") {
    const Polynomial<Integer> quartic =
        characteristic_polynomial(compile_chain(craps_game()));
    CHECK(quartic.coeffs() == std::vector<Integer>{Integer(1975), Integer(-18321),
                                                   Integer(51534), Integer(-58320),
                                                   Integer(23328)});
    const Polynomial<Integer> sextic =
        characteristic_polynomial(compile_chain(crapless_game()));
    CHECK(sextic.coeffs() ==
          std::vector<Integer>{Integer(172975), Integer(-5305446), Integer(30008394),
                               Integer(-73915740), Integer(93137040), Integer(-59206464),
                               Integer(15116544)});
}

TEST_CASE("interlacing bracket points") {
    const ChainSpec chain = compile_chain(craps_game());
    CHECK(interlacing_points(chain.transient) ==
          std::vector<Rational>{Rational(1), Rational(3, 4), Rational(13, 18),
                                Rational(25, 36), Rational(0)});
    // Duplicate diagonal entries (per-point chain) have no simple-root bracket.
    const ChainSpec split = compile_chain(craps_game(), PointMerging::separate);
    CHECK_THROWS_AS((void)interlacing_points(split.transient), std::domain_error);
}

TEST_CASE("certified roots of a known quadratic") {
    // (4z - 1)(4z - 3) = 16z^2 - 16z + 3, roots 1/4 and 3/4.
    const Polynomial<Integer> p({Integer(3), Integer(-16), Integer(16)});
    const std::vector<Rational> brackets{Rational(1), Rational(1, 2), Rational(0)};
    const std::vector<Real> roots = certified_roots(p, brackets);
    REQUIRE(roots.size() == 2);
    CHECK(abs(roots[0] - Real(3) / 4) < Real("1e-40"));
    CHECK(abs(roots[1] - Real(1) / 4) < Real("1e-40"));
}

TEST_CASE("certified root-finding rejects bad certificates") {
    // z^2 - z vanishes at both proposed brackets.
    CHECK_THROWS_AS((void)certified_roots(
                        Polynomial<Integer>({Integer(0), Integer(-1), Integer(1)}),
                        {Rational(1), Rational(1, 2), Rational(0)}),
                    std::runtime_error);
    // No sign change: z^2 + 1 is positive everywhere.
    CHECK_THROWS_AS((void)certified_roots(
                        Polynomial<Integer>({Integer(1), Integer(0), Integer(1)}),
                        {Rational(1), Rational(1, 2), Rational(0)}),
                    std::runtime_error);
    // Bracket count must match the degree.
    CHECK_THROWS_AS((void)certified_roots(
                        Polynomial<Integer>({Integer(3), Integer(-16), Integer(16)}),
                        {Rational(1), Rational(0)}),
                    std::invalid_argument);
}

TEST_CASE("craps eigenvalues: numeric and radical routes") {
    const ChainSpec chain = compile_chain(craps_game());
    const Spectrum numeric = eigenvalues_numeric(chain);
    const Spectrum radical = eigenvalues_radical(chain);
    CHECK(numeric.method == SpectrumMethod::numeric_roots);
    CHECK(radical.method == SpectrumMethod::radical_closed_form);
    REQUIRE(numeric.eigenvalues.size() == 4);
    REQUIRE(radical.eigenvalues.size() == 4);
    for (int i = 0; i < 4; ++i) {
        CHECK(format_fixed(numeric.eigenvalues[i], 18) == kCrapsEigen18[i]);
        CHECK(format_fixed(radical.eigenvalues[i], 18) == kCrapsEigen18[i]);
        CHECK(abs(numeric.eigenvalues[i] - radical.eigenvalues[i]) < Real("1e-40"));
    }
    // 40-digit spot check of the dominant eigenvalue.
    CHECK(abs(numeric.eigenvalues[0] -
              Real("0.8624737516593220299500832929327447291261")) < Real("1e-39"));

    // The radical form is specific to craps.
    CHECK_THROWS_AS((void)eigenvalues_radical(compile_chain(crapless_game())),
                    std::domain_error);
}

TEST_CASE("crapless eigenvalues") {
    const Spectrum s = eigenvalues_numeric(compile_chain(crapless_game()));
    REQUIRE(s.eigenvalues.size() == 6);
    for (int i = 0; i < 6; ++i)
        CHECK(format_fixed(s.eigenvalues[i], 18) == kCraplessEigen18[i]);
}

TEST_CASE("mixture coefficients") {
    const ChainSpec craps = compile_chain(craps_game());
    const GeometricMixture mix = mixture_coefficients(craps, eigenvalues_numeric(craps));
    REQUIRE(mix.terms.size() == 4);
    for (int i = 0; i < 4; ++i)
        CHECK(format_fixed(mix.terms[i].coefficient, 18) == kCrapsCoeff18[i]);
    CHECK(abs(mix.terms[0].coefficient -
              Real("1.211844812464518572144870060480304912853")) < Real("1e-38"));

    const ChainSpec crapless = compile_chain(crapless_game());
    const GeometricMixture mix0 =
        mixture_coefficients(crapless, eigenvalues_numeric(crapless));
    REQUIRE(mix0.terms.size() == 6);
    for (int i = 0; i < 6; ++i)
        CHECK(format_fixed(mix0.terms[i].coefficient, 18) == kCraplessCoeff18[i]);

    // c1 > 0, every later coefficient negative, sums telescoping to 1.
    for (const GeometricMixture& m : {mix, mix0}) {
        Real sum_c = 0, sum_ce = 0;
        for (std::size_t i = 0; i < m.terms.size(); ++i) {
            CHECK((i == 0 ? m.terms[i].coefficient > 0 : m.terms[i].coefficient < 0));
            sum_c += m.terms[i].coefficient;
            sum_ce += m.terms[i].coefficient * m.terms[i].rate;
        }
        CHECK(abs(sum_c - 1) < kIdentityTol);
        CHECK(abs(sum_ce - 1) < kIdentityTol);
    }
}

TEST_CASE("mixture coefficient validation") {
    const ChainSpec craps = compile_chain(craps_game());
    // Wrong spectrum size.
    Spectrum wrong = eigenvalues_numeric(compile_chain(crapless_game()));
    CHECK_THROWS_AS((void)mixture_coefficients(craps, wrong), std::invalid_argument);
    // A near-degenerate spectrum is rejected before the solve.
    Spectrum close = eigenvalues_numeric(craps);
    close.eigenvalues[1] = close.eigenvalues[2] + Real("1e-25");
    CHECK_THROWS_AS((void)mixture_coefficients(craps, close), std::runtime_error);
}

TEST_CASE("closed form tracks the exact tail") {
    for (const PointGameSpec& game : {craps_game(), crapless_game()}) {
        const ChainSpec chain = compile_chain(game);
        const GeometricMixture mix = mixture_coefficients(chain, eigenvalues_numeric(chain));
        const TailTable exact = tail_table(chain, 200);
        for (int n : {1, 2, 3, 10, 154, 200}) {
            const Real rel = abs(tail_closed_form(mix, n) / to_real(exact.at(n)) - 1);
            CHECK(rel < Real("1e-50"));
        }
    }
}

TEST_CASE("leading-term bound and thresholds") {
    const ChainSpec chain = compile_chain(craps_game());
    const GeometricMixture mix = mixture_coefficients(chain, eigenvalues_numeric(chain));

    const LeadingTermBound b3 = leading_term_bound(chain, mix, 3);
    CHECK(b3.bound > to_real(tail_matrix_power(chain, 3)));
    CHECK(b3.ratio > 1);
    const LeadingTermBound b154 = leading_term_bound(chain, mix, 154);
    CHECK(b154.ratio > 1);
    CHECK(b154.ratio < 1 + Real("1e-12"));

    // Measured first crossings of 1 + 10^-m for the craps ratio.
    CHECK(ratio_threshold(chain, mix, 3) == 15);
    CHECK(ratio_threshold(chain, mix, 6) == 59);
    CHECK(ratio_threshold(chain, mix, 9) == 104);
    CHECK(ratio_threshold(chain, mix, 12) == 150);
    CHECK_THROWS_AS((void)ratio_threshold(chain, mix, 40, 50), std::runtime_error);
}

TEST_CASE("eigenvector parametrization") {
    const ChainSpec chain = compile_chain(craps_game());
    const Spectrum s = eigenvalues_numeric(chain);
    // Residual certification happens inside; reaching here means < 1e-30.
    for (const Real& e : s.eigenvalues) {
        const RealVector r = eigenvector(chain, e);
        REQUIRE(r.size() == 5);
        CHECK(r(3) == 1);  // the parametrization is normalized at p6-8
        CHECK(r(4) == 0);  // transient eigenvectors vanish on the absorbing state
    }
    const RealVector unit = eigenvector(chain, Real(1));
    for (int i = 0; i < 5; ++i) CHECK(unit(i) == 1);

    CHECK_THROWS_AS((void)eigenvector(compile_chain(crapless_game()), Real(1)),
                    std::domain_error);
}

TEST_CASE("custom games go through the generic spectral path") {
    PointGameSpec g;  // two singleton point groups, odd-order transient block
    g.naturals = {7, 11, 6, 8};
    g.craps_rolls = {2, 3, 12, 9, 10};
    g.points = {4, 5};
    const ChainSpec chain = compile_chain(g);
    CHECK(chain.transient.rows() == 3);
    const Spectrum s = eigenvalues_numeric(chain);
    const GeometricMixture mix = mixture_coefficients(chain, s);
    const TailTable exact = tail_table(chain, 60);
    for (int n = 1; n <= 60; ++n)
        CHECK(abs(tail_closed_form(mix, n) / to_real(exact.at(n)) - 1) < Real("1e-40"));
}

TEST_CASE("degenerate chains cannot be certified") {
    PointGameSpec g;
    g.naturals = {7, 11};
    g.craps_rolls = {2, 3, 4, 5, 6, 8, 9, 10, 12};
    g.points = {};
    CHECK_THROWS_AS((void)eigenvalues_numeric(compile_chain(g)), std::runtime_error);
}
