#pragma once

#include "epist/bigint.hpp"
#include "epist/morphism.hpp"

#include <cstdint>
#include <vector>

namespace epist {

struct RatInterval {
  BigRat lo, hi;
  BigRat width() const { return hi - lo; }
  BigRat mid() const { return (lo + hi) / 2; }
  bool contains(const BigRat& v) const { return lo <= v && v <= hi; }
};

/// Disk enclosure of a complex value: center (exact rational re/im, taken
/// from the dyadic float computation) plus radius bound.
struct ComplexEnclosure {
  BigRat re, im, radius;
};

/// Constants attached to x^d - x^{d-1} - ... - x - 1: the Pisot root t,
/// all roots t_1..t_d (t_1 = t), the coefficients c_k of the explicit
/// solution, and the critical exponent 2 + 1/(t-1).
struct DBonacciConstants {
  int d = 0;
  long precision_bits = 0;
  RatInterval t;
  std::vector<ComplexEnclosure> roots;   // t_1 first; |t_k| < 1 for k >= 2
  std::vector<ComplexEnclosure> coeffs;  // c_k = (d-1)t_k / ((d+1)t_k - 2d)
  RatInterval critical_exponent;         // 2 + 1/(t-1)
};

// Certified enclosure of the unique positive root of
// x^d - x^{d-1} - ... - 1, of width <= 2^-bits. Bisection on the bracket
// (2 - 2^{1-d}, 2 - 2^{-d}) with exact rational sign evaluation, then
// sign-certified Newton doubling; every enclosure is verified by a sign
// change before being adopted.
RatInterval pisot_root_enclosure(int d, long bits);

// d >= 2, 64 <= precision_bits <= 512 (complex roots run on a fixed
// precision ladder; the real root enclosure honors any width).
DBonacciConstants dbonacci_constants(int d, long precision_bits);

// Exact s_N: (d-1)2^N + 1 for N < d, then the d-term recurrence.
BigInt s_recurrence(int d, std::int64_t n);
std::vector<BigInt> s_recurrence_values(int d, std::int64_t n_max);

struct ExplicitEval {
  BigRat value;        // sum_k c_k t_k^N, real part, exact image of the float result
  BigRat error_bound;  // propagated rounding bound
};
ExplicitEval explicit_eval(int d, std::int64_t n, long precision_bits);

struct InequalityCertificate {
  bool pass = false;
  std::int64_t first_violation = -1;  // set when pass == false
  std::int64_t checked = 0;
  long enclosure_bits = 0;            // final precision of the t enclosure
};

// Certified check of t s_{N-1} - s_N <= (t-1) d for 1 <= N <= n_max, in
// exact rational interval arithmetic. The t enclosure is refined on demand
// (the check needs roughly N bits at step N); throws IndeterminateError if
// the cap is hit while still straddling.
InequalityCertificate verify_inequality(int d, std::int64_t n_max);
// Same check against a caller-supplied enclosure, with no refinement.
InequalityCertificate verify_inequality_with_root(int d, std::int64_t n_max,
                                                  const RatInterval& t);

struct ThresholdRow {
  int d;
  RatInterval t;
  RatInterval e;  // E(u_d) = 2 + 1/(t-1)
};

// Rows for 2 <= d <= d_max. Verifies 3 + 1/(2^d - 1) < E < 3 + 1/(2^{d-1}-1)
// and strict monotonicity of the E column; a violation means an arithmetic
// bug and throws.
std::vector<ThresholdRow> threshold_table(int d_max, long precision_bits = 96);

// 0 -> 01, 1 -> 02, ..., d-2 -> 0(d-1), d-1 -> 0.
Morphism dbonacci_morphism(int d);

}  // namespace epist
