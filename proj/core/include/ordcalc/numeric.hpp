#ifndef ORDCALC_NUMERIC_HPP
#define ORDCALC_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace ordcalc {

/// Arbitrary-precision signed integer. Expansion coefficients overflow
/// 64 bits near k = 25, so every exact path uses this type.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar built on BigInt; always kept in lowest terms.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

BigInt factorial(unsigned n);

/// Converts an exact integer into the scalar kind of a table (exact or float).
template <typename Scalar>
Scalar scalar_from_integer(const BigInt& v);

template <>
inline Rational scalar_from_integer<Rational>(const BigInt& v) {
  return Rational(v);
}

template <>
inline double scalar_from_integer<double>(const BigInt& v) {
  return to_double(v);
}

}  // namespace ordcalc

#endif
