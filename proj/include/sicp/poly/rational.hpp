#pragma once

#include <gmpxx.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <string>
#include <string_view>

namespace sicp {

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
using BigRational = mpq_class;
using BigInt = mpz_class;

/// 50 significant decimal digits; used to polish roots of exact polynomials.
using HighFloat = boost::multiprecision::cpp_bin_float_50;

/// Parses "12", "-3/4", "0.125", "1e-3" exactly. Throws std::invalid_argument.
BigRational parse_rational(std::string_view s);

/// The exact binary value of a finite double.
BigRational rational_from_double(double v);

std::string to_string(const BigRational& q);

template <class T>
T rational_cast(const BigRational& q);

template <>
inline double rational_cast<double>(const BigRational& q) {
    return q.get_d();
}

template <>
inline BigRational rational_cast<BigRational>(const BigRational& q) {
    return q;
}

template <>
inline HighFloat rational_cast<HighFloat>(const BigRational& q) {
    if (q.get_den() == 1) return HighFloat(q.get_num().get_str());
    return HighFloat(q.get_num().get_str()) / HighFloat(q.get_den().get_str());
}

/// Gcd of the numerators over lcm of the denominators; positive.
BigRational rational_gcd(const BigRational& a, const BigRational& b);

}  // namespace sicp
