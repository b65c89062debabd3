#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace riesz {

// Exact rationals, always in lowest terms with a positive denominator.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& x) {
  return boost::multiprecision::numerator(x);
}
inline BigInt denominator_of(const Rational& x) {
  return boost::multiprecision::denominator(x);
}

BigInt floor_of(const Rational& x);
BigInt ceil_of(const Rational& x);

// The unique element of (x + Z) ∩ [0, 1).
Rational frac(const Rational& x);

// x reduced into [0, period).
Rational mod(const Rational& x, const Rational& period);

double to_double(const Rational& x);

// Throws riesz::Error(kOutOfRange) when the value does not fit.
std::int64_t to_int64(const BigInt& x);

// Accepts "p/q", integers and exact decimals ("0.3" -> 3/10, "-1.25").
// Anything else (including "pi", "sqrt2", exponents) is rejected with a
// riesz::Error(kParse) naming the offending column.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);

BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace riesz
