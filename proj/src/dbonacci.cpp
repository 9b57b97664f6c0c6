#include "epist/dbonacci.hpp"

#include "epist/error.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <vector>

namespace epist {

namespace {

namespace mp = boost::multiprecision;
using F133 = mp::number<mp::cpp_bin_float<40>>;   // 134 mantissa bits
using F266 = mp::number<mp::cpp_bin_float<80>>;   // 267
using F532 = mp::number<mp::cpp_bin_float<160>>;  // 532

// Exact sign of p(x) = x^d - x^{d-1} - ... - x - 1 at a rational point:
// multiply through by den^d and evaluate in integers.
int sign_p(int d, const BigRat& x) {
  BigInt a = numerator(x), b = denominator(x);
  std::vector<BigInt> ap(d + 1), bp(d + 1);
  ap[0] = 1;
  bp[0] = 1;
  for (int k = 1; k <= d; ++k) {
    ap[k] = ap[k - 1] * a;
    bp[k] = bp[k - 1] * b;
  }
  BigInt val = ap[d];
  for (int k = 0; k < d; ++k) val -= ap[k] * bp[d - k];
  return val > 0 ? 1 : (val < 0 ? -1 : 0);
}

BigRat eval_p(int d, const BigRat& x) {
  BigRat acc = 1;
  for (int k = 0; k < d; ++k) acc = acc * x - 1;
  return acc;
}

BigRat eval_dp(int d, const BigRat& x) {
  BigRat acc = d;
  for (int k = 1; k < d; ++k) acc = acc * x - (d - k);
  return acc;
}

// Nearest dyadic with denominator 2^bits.
BigRat round_dyadic(const BigRat& v, long bits) {
  BigInt num = numerator(v) * pow2(bits) * 2 + denominator(v);
  BigInt den = denominator(v) * 2;
  BigInt q = num / den;
  if (num % den != 0 && num < 0) --q;
  return BigRat(q, pow2(bits));
}

long width_bits(const RatInterval& iv) {
  BigRat w = iv.width();
  if (w <= 0) return std::numeric_limits<long>::max() / 2;
  long nb = static_cast<long>(msb(numerator(w)));
  long db = static_cast<long>(msb(denominator(w)));
  return db - nb - 1;  // width <= 2^-(db-nb-1)
}

template <class Real>
struct Cx {
  Real re{}, im{};
};

template <class Real>
Cx<Real> operator+(const Cx<Real>& a, const Cx<Real>& b) {
  return {a.re + b.re, a.im + b.im};
}
template <class Real>
Cx<Real> operator-(const Cx<Real>& a, const Cx<Real>& b) {
  return {a.re - b.re, a.im - b.im};
}
template <class Real>
Cx<Real> operator*(const Cx<Real>& a, const Cx<Real>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <class Real>
Cx<Real> operator/(const Cx<Real>& a, const Cx<Real>& b) {
  Real n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
template <class Real>
Real cabs(const Cx<Real>& a) {
  return sqrt(a.re * a.re + a.im * a.im);
}

template <class Real>
Cx<Real> poly_eval(int d, const Cx<Real>& z) {
  Cx<Real> acc{Real(1), Real(0)};
  const Cx<Real> one{Real(1), Real(0)};
  for (int k = 0; k < d; ++k) acc = acc * z - one;
  return acc;
}

template <class Real>
Cx<Real> dpoly_eval(int d, const Cx<Real>& z) {
  Cx<Real> acc{Real(d), Real(0)};
  for (int k = 1; k < d; ++k) acc = acc * z - Cx<Real>{Real(d - k), Real(0)};
  return acc;
}

// Weierstrass / Durand-Kerner simultaneous iteration, classic seeds on a
// near-unit circle.
template <class Real>
std::vector<Cx<Real>> durand_kerner(int d) {
  const Real tol = ldexp(Real(1), -(std::numeric_limits<Real>::digits - 8));
  std::vector<Cx<Real>> z(d);
  Cx<Real> seed{Real(4) / 10, Real(9) / 10}, p = seed;
  for (int k = 0; k < d; ++k) {
    z[k] = p;
    p = p * seed;
  }
  for (int iter = 0; iter < 2000; ++iter) {
    Real worst = 0;
    for (int k = 0; k < d; ++k) {
      Cx<Real> denom{Real(1), Real(0)};
      for (int j = 0; j < d; ++j)
        if (j != k) denom = denom * (z[k] - z[j]);
      Cx<Real> w = poly_eval(d, z[k]) / denom;
      z[k] = z[k] - w;
      worst = std::max(worst, Real(cabs(w) / (1 + cabs(z[k]))));
    }
    if (worst < tol) return z;
  }
  throw ConvergenceError("root iteration did not reach the requested precision", 0, 0);
}

BigRat rat_of(const F133& v) { return BigRat(v); }
BigRat rat_of(const F266& v) { return BigRat(v); }
BigRat rat_of(const F532& v) { return BigRat(v); }

template <class Real>
Real real_of(const BigRat& v) {
  return Real(numerator(v)) / Real(denominator(v));
}

template <class Real>
DBonacciConstants constants_impl(int d, long precision_bits, const RatInterval& t) {
  DBonacciConstants out;
  out.d = d;
  out.precision_bits = precision_bits;
  out.t = t;
  out.critical_exponent = {2 + BigRat(1) / (t.hi - 1), 2 + BigRat(1) / (t.lo - 1)};

  auto roots = durand_kerner<Real>(d);

  // t is the only root of modulus > 1; replace the float image of t by the
  // certified rational enclosure midpoint.
  int it = 0;
  for (int k = 1; k < d; ++k)
    if (cabs(roots[k]) > cabs(roots[it])) it = k;
  std::swap(roots[0], roots[it]);
  const BigRat tmid = t.mid();
  if (abs(rat_of(roots[0].re) - tmid) > t.width() + BigRat(1, 1000))
    throw Error("dominant root does not match the certified real enclosure");
  roots[0] = {real_of<Real>(tmid), Real(0)};

  std::sort(roots.begin() + 1, roots.end(), [](const Cx<Real>& a, const Cx<Real>& b) {
    if (a.re != b.re) return a.re > b.re;
    return a.im > b.im;
  });

  const Real eps = std::numeric_limits<Real>::epsilon();
  for (int k = 0; k < d; ++k) {
    // A posteriori bound: min_j |z - t_j| <= d |p(z)/p'(z)|.
    Real rad = d * cabs(poly_eval(d, roots[k]) / dpoly_eval(d, roots[k]));
    rad = 2 * rad + 8 * eps * (1 + cabs(roots[k]));
    if (k == 0) rad = std::max(rad, Real(real_of<Real>(t.width())));
    if (k >= 1 && !(cabs(roots[k]) < 1))
      throw Error("conjugate root escaped the unit disk");
    out.roots.push_back({rat_of(roots[k].re), rat_of(roots[k].im), rat_of(rad)});
  }

  // c_k = (d-1) t_k / ((d+1) t_k - 2d); first-order error propagation.
  for (int k = 0; k < d; ++k) {
    Cx<Real> z{real_of<Real>(out.roots[k].re), real_of<Real>(out.roots[k].im)};
    Cx<Real> den = Cx<Real>{Real(d + 1), Real(0)} * z - Cx<Real>{Real(2 * d), Real(0)};
    Cx<Real> c = (Cx<Real>{Real(d - 1), Real(0)} * z) / den;
    Real dc = Real(d - 1) * 2 * d / (cabs(den) * cabs(den));  // |c'(z)|
    Real rad = 2 * (dc * real_of<Real>(out.roots[k].radius) + 8 * eps * (1 + cabs(c)));
    out.coeffs.push_back({rat_of(c.re), rat_of(c.im), rat_of(rad)});
  }
  return out;
}

template <class Real>
ExplicitEval explicit_eval_impl(const DBonacciConstants& cs, std::int64_t n) {
  const int d = cs.d;
  const Real eps = std::numeric_limits<Real>::epsilon();
  Cx<Real> total{Real(0), Real(0)};
  Real scale = 0, prop = 0;
  for (int k = 0; k < d; ++k) {
    Cx<Real> z{real_of<Real>(cs.roots[k].re), real_of<Real>(cs.roots[k].im)};
    Cx<Real> c{real_of<Real>(cs.coeffs[k].re), real_of<Real>(cs.coeffs[k].im)};
    Cx<Real> zn{Real(1), Real(0)};
    for (std::int64_t i = 0; i < n; ++i) zn = zn * z;
    total = total + c * zn;
    Real az = cabs(z), azn = cabs(zn), ac = cabs(c);
    scale += ac * azn;
    // |c_k t_k^N| moves by rad_c |t_k|^N + |c_k| N |t_k|^{N-1} rad_t.
    Real rz = real_of<Real>(cs.roots[k].radius);
    Real rc = real_of<Real>(cs.coeffs[k].radius);
    Real pw = az > 0 ? Real(azn / az) : Real(0);
    prop += rc * azn + ac * Real(static_cast<long>(n)) * pw * rz;
  }
  Real bound = Real(4 * (n + 16)) * eps * (scale + 1) + 4 * prop + cabs(Cx<Real>{Real(0), total.im});
  ExplicitEval out;
  out.value = rat_of(total.re);
  out.error_bound = rat_of(bound);
  return out;
}

long tier_bits(long precision_bits) {
  if (precision_bits <= 134) return 134;
  if (precision_bits <= 267) return 267;
  if (precision_bits <= 512) return 532;
  throw Error("precision above 512 bits is not available for the complex roots");
}

}  // namespace

RatInterval pisot_root_enclosure(int d, long bits) {
  if (d < 2) throw Error("d must be at least 2");
  if (bits < 1) throw Error("requested width must be positive");
  // Bracket 2 - 2^{1-d} < t < 2 - 2^{-d}.
  RatInterval iv{BigRat(pow2(d) - 2, pow2(d - 1)), BigRat(pow2(d + 1) - 1, pow2(d))};
  if (sign_p(d, iv.lo) >= 0 || sign_p(d, iv.hi) <= 0)
    throw Error("root bracket failed its sign check");

  auto bisect = [&](int steps) {
    for (int i = 0; i < steps; ++i) {
      BigRat mid = iv.mid();
      if (sign_p(d, mid) < 0)
        iv.lo = mid;
      else
        iv.hi = mid;
    }
  };

  bisect(std::min<long>(bits, 128) + 4);

  // Newton doubling; every candidate interval is adopted only after an
  // explicit sign change certifies it.
  while (width_bits(iv) < bits) {
    long cur = width_bits(iv);
    long next = std::min(bits + 8, 2 * cur - 8);
    if (next <= cur + 8) {
      bisect(16);
      continue;
    }
    BigRat x = iv.mid();
    BigRat nx = x - eval_p(d, x) / eval_dp(d, x);
    nx = round_dyadic(nx, next + 16);
    BigRat epsw = BigRat(1, pow2(next));
    RatInterval cand{nx - epsw, nx + epsw};
    if (cand.lo > iv.lo && cand.hi < iv.hi && sign_p(d, cand.lo) < 0 &&
        sign_p(d, cand.hi) > 0) {
      iv = cand;
    } else {
      bisect(16);
    }
  }
  return iv;
}

DBonacciConstants dbonacci_constants(int d, long precision_bits) {
  if (d < 2) throw Error("d must be at least 2");
  if (precision_bits < 64) throw Error("precision must be at least 64 bits");
  long tier = tier_bits(precision_bits);
  RatInterval t = pisot_root_enclosure(d, precision_bits + 16);
  if (tier == 134) return constants_impl<F133>(d, precision_bits, t);
  if (tier == 267) return constants_impl<F266>(d, precision_bits, t);
  return constants_impl<F532>(d, precision_bits, t);
}

BigInt s_recurrence(int d, std::int64_t n) {
  return s_recurrence_values(d, n).back();
}

std::vector<BigInt> s_recurrence_values(int d, std::int64_t n_max) {
  if (d < 2) throw Error("d must be at least 2");
  if (n_max < 0) throw Error("N must be nonnegative");
  std::vector<BigInt> s;
  s.reserve(n_max + 1);
  BigInt window = 0;  // s_{N-1} + ... + s_{N-d}
  for (std::int64_t n = 0; n <= n_max; ++n) {
    BigInt v;
    if (n < d)
      v = (d - 1) * pow2(n) + 1;
    else {
      v = window;
    }
    s.push_back(v);
    window += v;
    if (n >= d) window -= s[n - d];
  }
  return s;
}

ExplicitEval explicit_eval(int d, std::int64_t n, long precision_bits) {
  if (n < 0) throw Error("N must be nonnegative");
  auto cs = dbonacci_constants(d, precision_bits);
  long tier = tier_bits(precision_bits);
  if (tier == 134) return explicit_eval_impl<F133>(cs, n);
  if (tier == 267) return explicit_eval_impl<F266>(cs, n);
  return explicit_eval_impl<F532>(cs, n);
}

namespace {

InequalityCertificate check_inequality(int d, std::int64_t n_max, RatInterval t,
                                       bool allow_refine) {
  // t s_{N-1} - s_N <= (t-1) d  <=>  t (s_{N-1} - d) <= s_N - d.
  InequalityCertificate cert;
  auto s = s_recurrence_values(d, n_max);
  const long cap = allow_refine ? std::max<long>(1024, 8 * n_max) : 0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const BigInt a = s[n - 1] - d, b = s[n] - d;
    while (true) {
      // hi * a <= b certifies pass, lo * a > b certifies failure.
      if (numerator(t.hi) * a <= b * denominator(t.hi)) break;
      if (numerator(t.lo) * a > b * denominator(t.lo)) {
        cert.pass = false;
        cert.first_violation = n;
        cert.checked = n;
        cert.enclosure_bits = width_bits(t);
        return cert;
      }
      long cur = width_bits(t);
      if (!allow_refine || cur >= cap)
        throw IndeterminateError("inequality check straddles the threshold at N=" +
                                 std::to_string(n) + "; enclosure too wide");
      long want = std::min<long>(cap, std::max<long>(2 * cur, static_cast<long>(msb(s[n_max])) + 64));
      t = pisot_root_enclosure(d, want);
    }
  }
  cert.pass = true;
  cert.checked = n_max;
  cert.enclosure_bits = width_bits(t);
  return cert;
}

}  // namespace

InequalityCertificate verify_inequality(int d, std::int64_t n_max) {
  if (n_max < 1) throw Error("Nmax must be at least 1");
  return check_inequality(d, n_max, pisot_root_enclosure(d, 128), true);
}

InequalityCertificate verify_inequality_with_root(int d, std::int64_t n_max,
                                                  const RatInterval& t) {
  if (n_max < 1) throw Error("Nmax must be at least 1");
  return check_inequality(d, n_max, t, false);
}

std::vector<ThresholdRow> threshold_table(int d_max, long precision_bits) {
  if (d_max < 2) throw Error("dMax must be at least 2");
  std::vector<ThresholdRow> rows;
  for (int d = 2; d <= d_max; ++d) {
    RatInterval t = pisot_root_enclosure(d, precision_bits);
    RatInterval e{2 + BigRat(1) / (t.hi - 1), 2 + BigRat(1) / (t.lo - 1)};
    if (!(e.lo > 3 + BigRat(1, pow2(d) - 1)))
      throw Error("threshold row failed its lower sandwich bound");
    if (!(e.hi < 3 + BigRat(1, pow2(d - 1) - 1)))
      throw Error("threshold row failed its upper sandwich bound");
    if (!rows.empty() && !(e.hi < rows.back().e.lo))
      throw Error("threshold column is not strictly decreasing");
    rows.push_back({d, t, e});
  }
  return rows;
}

Morphism dbonacci_morphism(int d) {
  if (d < 2) throw Error("d must be at least 2");
  std::vector<Word> images;
  images.reserve(d);
  for (int j = 0; j < d; ++j) {
    std::vector<Letter> img{0};
    if (j + 1 < d) img.push_back(static_cast<Letter>(j + 1));
    images.emplace_back(d, std::move(img));
  }
  return Morphism(d, std::move(images));
}

}  // namespace epist
