#include "craps/numeric.hpp"

#include <boost/math/special_functions/fpclassify.hpp>

#include <stdexcept>
#include <utility>

namespace craps {

namespace {

Integer pow10(int k) {
    return mp::pow(Integer(10), static_cast<unsigned>(k));
}

int decimal_digit_count(const Integer& a) {
    return static_cast<int>(a.str().size());  // a > 0
}

// Round p/q (p >= 0, q > 0) to the nearest integer, ties to even.
Integer round_half_even(const Integer& p, const Integer& q) {
    Integer quot = p / q;
    const Integer rem2 = 2 * (p - quot * q);
    if (rem2 > q || (rem2 == q && mp::bit_test(quot, 0))) ++quot;
    return quot;
}

struct DecimalParts {
    bool negative = false;
    std::string digits;  // rounded mantissa digits, no point
    int exponent = 0;    // value = 0.digits... * 10^(exponent+1), i.e.
                         // digits[0] sits in the 10^exponent place
    bool zero = false;
};

// Split |num/den| into `sig` correctly rounded decimal digits plus the
// power-of-ten position of the leading digit.
DecimalParts decompose(const Rational& x, int sig) {
    if (sig < 1) throw std::invalid_argument("digit count must be positive");
    DecimalParts out;
    if (x == 0) {
        out.zero = true;
        return out;
    }
    out.negative = x < 0;
    const Integer a = mp::abs(numerator(x));
    const Integer b = denominator(x);

    // floor(log10(a/b)) is either da-db or da-db-1; settle with one compare.
    int e = decimal_digit_count(a) - decimal_digit_count(b);
    const bool at_least = (e >= 0) ? (a >= b * pow10(e)) : (a * pow10(-e) >= b);
    if (!at_least) --e;

    const int shift = sig - 1 - e;
    Integer mant = (shift >= 0) ? round_half_even(a * pow10(shift), b)
                                : round_half_even(a, b * pow10(-shift));
    if (mant == pow10(sig)) {  // 9.99... rounded up a decade
        mant = pow10(sig - 1);
        ++e;
    }
    out.digits = mant.str();
    out.exponent = e;
    return out;
}

std::string render(const DecimalParts& p, int sig) {
    if (p.zero) return "0";
    std::string s;
    const int e = p.exponent;
    if (e <= -5 || e >= 7) {  // scientific
        s += p.digits.substr(0, 1);
        if (sig > 1) {
            s += '.';
            s += p.digits.substr(1);
        }
        s += 'e';
        s += (e < 0) ? '-' : '+';
        const std::string mag = std::to_string(e < 0 ? -e : e);
        if (mag.size() < 2) s += '0';
        s += mag;
    } else if (e >= 0) {
        if (sig > e + 1) {
            s += p.digits.substr(0, e + 1);
            s += '.';
            s += p.digits.substr(e + 1);
        } else {
            s += p.digits;
            s.append(e + 1 - sig, '0');
        }
    } else {  // -4 <= e <= -1
        s += "0.";
        s.append(-e - 1, '0');
        s += p.digits;
    }
    return p.negative ? "-" + s : s;
}

}  // namespace

Rational to_rational(const Real& x) {
    if (!boost::math::isfinite(x))
        throw std::invalid_argument("cannot convert non-finite value to rational");
    return Rational(x);
}

std::string format_decimal(const Rational& x, int significant_digits) {
    return render(decompose(x, significant_digits), significant_digits);
}

std::string format_decimal(const Real& x, int significant_digits) {
    return format_decimal(to_rational(x), significant_digits);
}

std::string format_fixed(const Rational& x, int decimal_places) {
    if (decimal_places < 0) throw std::invalid_argument("decimal places must be >= 0");
    const bool neg = x < 0;
    const Integer a = mp::abs(numerator(x));
    const Integer b = denominator(x);
    const Integer mant = round_half_even(a * pow10(decimal_places), b);
    std::string digits = mant.str();
    if (decimal_places == 0) return (neg && mant != 0) ? "-" + digits : digits;
    if (static_cast<int>(digits.size()) < decimal_places + 1)
        digits.insert(0, decimal_places + 1 - digits.size(), '0');
    digits.insert(digits.size() - decimal_places, ".");
    return (neg && mant != 0) ? "-" + digits : digits;
}

std::string format_fixed(const Real& x, int decimal_places) {
    return format_fixed(to_rational(x), decimal_places);
}

}  // namespace craps
