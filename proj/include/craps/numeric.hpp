// Scalar types and decimal rendering shared by every module.
//
// Exact work (transition matrices, tail probabilities, characteristic
// polynomials) runs on arbitrary-precision rationals; spectral work (roots,
// mixture coefficients) runs on 60-significant-digit binary floats.  Dense
// containers are Eigen types templated on those scalars.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

// Boost 1.74 probes candidate cpp_int constructor arguments as byte
// containers via C::const_iterator; Eigen 3.4 typedefs const_iterator to
// void on two-dimensional expressions, which hard-errors inside
// iterator_traits before SFINAE can reject the overload.  Route Eigen
// types straight to "not a byte container" before any instantiation.
namespace boost { namespace multiprecision { namespace detail {
template <class C>
  requires std::is_base_of_v<Eigen::EigenBase<C>, C>
struct is_byte_container<C> : public boost::false_type {};
}}}  // namespace boost::multiprecision::detail

#include <Eigen/Dense>

#include <string>

namespace craps {

namespace mp = boost::multiprecision;

using Integer  = mp::cpp_int;
using Rational = mp::cpp_rational;
// 60 decimal digits: comfortably more than the certification tolerances
// (1e-40 residuals, 1e-20 gaps) demand.
using Real = mp::number<mp::cpp_bin_float<60>>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = MatrixX<Rational>;
using RationalVector = VectorX<Rational>;
using RealMatrix     = MatrixX<Real>;
using RealVector     = VectorX<Real>;

inline Real to_real(const Rational& x) { return Real(x); }

// Exact: every finite binary float is a dyadic rational.
Rational to_rational(const Real& x);

// Correctly rounded decimal string with `significant_digits` significant
// digits, round-half-even, computed in exact integer arithmetic.  Uses
// scientific notation ("1.78882426e-10") iff |x| < 1e-4 or |x| >= 1e7,
// plain fixed-point otherwise.  Trailing zeros are kept so a column of
// values lines up.
std::string format_decimal(const Rational& x, int significant_digits);
std::string format_decimal(const Real& x, int significant_digits);

// Correctly rounded fixed-point string with `decimal_places` digits after
// the point (round-half-even), e.g. format_fixed(e1, 18) ==
// "0.862473751659322030".
std::string format_fixed(const Rational& x, int decimal_places);
std::string format_fixed(const Real& x, int decimal_places);

}  // namespace craps
