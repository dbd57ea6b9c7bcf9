#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <complex>

#include "quadboard/rational.hpp"

namespace quadboard {

/// Working precision for every floating evaluation: x87 extended (64-bit mantissa) on x86-64.
using Real = long double;
using Complex = std::complex<Real>;

/// Wide-exponent float for intermediate sums whose terms overflow Real.
using Wide = ::boost::multiprecision::cpp_bin_float_50;

inline Real to_real(const Integer& v) { return v.convert_to<Real>(); }
inline Real to_real(const Rational& v) { return to_real(numerator(v)) / to_real(denominator(v)); }

} // namespace quadboard
