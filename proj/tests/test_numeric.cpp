#include "craps/numeric.hpp"

#include <doctest.h>

using namespace craps;

TEST_CASE("format_decimal: fixed-point rendering") {
    CHECK(format_decimal(Rational(1, 3), 9) == "0.333333333");
    CHECK(format_decimal(Rational(2, 3), 9) == "0.666666667");
    CHECK(format_decimal(Rational(1), 9) == "1.00000000");
    CHECK(format_decimal(Rational(0), 9) == "0");
    CHECK(format_decimal(Rational(-1, 8), 3) == "-0.125");
    CHECK(format_decimal(Rational(1671, 196), 9) == "8.52551020");
    CHECK(format_decimal(Rational(123456), 4) == "123500");  // pad, still fixed
}

TEST_CASE("format_decimal: round half to even") {
    CHECK(format_decimal(Rational(1, 8), 2) == "0.12");    // 0.125 -> even
    CHECK(format_decimal(Rational(3, 8), 2) == "0.38");    // 0.375 -> even
    CHECK(format_decimal(Rational(25, 1000), 1) == "0.02");
    CHECK(format_decimal(Rational(35, 1000), 1) == "0.04");
    CHECK(format_decimal(Rational(999, 1000), 2) == "1.0");  // carry a decade
}

TEST_CASE("format_decimal: scientific thresholds") {
    // Fixed inside [1e-4, 1e7), scientific outside.
    CHECK(format_decimal(Rational(1, 10000), 6) == "0.000100000");
    CHECK(format_decimal(Rational(1, 10001), 6) == "9.99900e-05");
    CHECK(format_decimal(Rational(9999999), 7) == "9999999");
    CHECK(format_decimal(Rational(10000000), 7) == "1.000000e+07");
    CHECK(format_decimal(Rational(5590264072), 3) == "5.59e+09");
    CHECK(format_decimal(Rational(5590264072), 9) == "5.59026407e+09");
    CHECK(format_decimal(Rational(-1, 1000000), 1) == "-1e-06");
}

TEST_CASE("format_fixed: decimal places") {
    CHECK(format_fixed(Rational(1671, 196), 4) == "8.5255");
    CHECK(format_fixed(Rational(-1, 40), 18) == "-0.025000000000000000");
    CHECK(format_fixed(Rational(1, 8), 2) == "0.12");
    CHECK(format_fixed(Rational(3, 8), 2) == "0.38");
    CHECK(format_fixed(Rational(999, 1000), 2) == "1.00");
    CHECK(format_fixed(Rational(5), 0) == "5");
    // A negative value that rounds to zero loses its sign.
    CHECK(format_fixed(Rational(-1, Integer("1000000000000000000000")), 3) == "0.000");
}

TEST_CASE("real/rational conversions are exact") {
    const Real r("0.1");  // not a dyadic, but the stored binary value is
    CHECK(to_real(to_rational(r)) == r);
    CHECK(to_rational(Real(3) / 4) == Rational(3, 4));
    CHECK(format_decimal(Real("1.5e-11"), 2) == "1.5e-11");
    CHECK_THROWS_AS((void)to_rational(Real(1) / Real(0)), std::invalid_argument);
}

TEST_CASE("format argument validation") {
    CHECK_THROWS_AS((void)format_decimal(Rational(1), 0), std::invalid_argument);
    CHECK_THROWS_AS((void)format_fixed(Rational(1), -1), std::invalid_argument);
}

TEST_CASE("working precision is at least 50 digits") {
    static_assert(std::numeric_limits<Real>::digits10 >= 50);
    CHECK(std::numeric_limits<Real>::digits10 >= 50);
}
