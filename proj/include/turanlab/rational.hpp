#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace turanlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) { return Rational(num, den); }

/// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);

/// Nearest double; only for display and ratio columns, never for verdicts.
double to_double(const Rational& r);

}  // namespace turanlab
