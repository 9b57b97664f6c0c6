#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace epist {

// Lengths, matrix entries and ratios grow like t^N with t close to 2, so
// everything exact is kept in arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt pow2(long k) { return BigInt(1) << k; }

enum class Rounding { Down, Up, Nearest };

// Decimal rendering of an exact rational with a fixed number of fractional
// digits. Down/Up round toward -inf/+inf, which keeps [lo, hi] enclosures
// valid after printing.
std::string to_decimal(const BigRat& v, int frac_digits, Rounding mode = Rounding::Nearest);

// Parses "123", "-1.25", "1e-9", "2.5e3" or an exact fraction "a/b".
BigRat rat_from_decimal(const std::string& text);

}  // namespace epist
