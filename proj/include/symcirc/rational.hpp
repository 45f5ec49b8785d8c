#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace symcirc {

using Rational = boost::multiprecision::cpp_rational;

inline Rational frac(long long num, long long den = 1) { return Rational(num, den); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// "a/b", or "a" when the denominator is 1
std::string to_string(const Rational& r);

} // namespace symcirc
