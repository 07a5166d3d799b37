#pragma once

#include <cmath>

// Double-double helpers used where a plain double phase or product would
// throw away the digits the Fresnel machinery needs (large quadratic
// phases, high-order momenta, Lommel sums with heavy cancellation).
// Error-free transforms follow Dekker/Knuth; twoProd relies on FMA.

namespace clothoid::detail {

struct dd {
  double hi{0.0};
  double lo{0.0};
};

inline dd twoSum(double a, double b) {
  double s = a + b;
  double v = s - a;
  double e = (a - (s - v)) + (b - v);
  return {s, e};
}

inline dd quickTwoSum(double a, double b) {
  // requires |a| >= |b|
  double s = a + b;
  return {s, b - (s - a)};
}

inline dd twoProd(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline dd ddAdd(const dd& a, const dd& b) {
  dd s = twoSum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return quickTwoSum(s.hi, s.lo);
}

inline dd ddAdd(const dd& a, double b) {
  dd s = twoSum(a.hi, b);
  s.lo += a.lo;
  return quickTwoSum(s.hi, s.lo);
}

inline dd ddSub(const dd& a, const dd& b) { return ddAdd(a, dd{-b.hi, -b.lo}); }

inline dd ddNeg(const dd& a) { return {-a.hi, -a.lo}; }

inline dd ddMul(const dd& a, const dd& b) {
  dd p = twoProd(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quickTwoSum(p.hi, p.lo);
}

inline dd ddMul(const dd& a, double b) {
  dd p = twoProd(a.hi, b);
  p.lo += a.lo * b;
  return quickTwoSum(p.hi, p.lo);
}

inline dd ddDiv(const dd& a, double b) {
  double q1 = a.hi / b;
  dd p = twoProd(q1, b);
  double r = ((a.hi - p.hi) - p.lo) + a.lo;
  double q2 = r / b;
  return quickTwoSum(q1, q2);
}

inline dd ddDiv(const dd& a, const dd& b) {
  double q1 = a.hi / b.hi;
  dd r = ddSub(a, ddMul(b, q1));
  double q2 = r.hi / b.hi;
  r = ddSub(r, ddMul(b, q2));
  double q3 = r.hi / b.hi;
  return ddAdd(quickTwoSum(q1, q2), q3);
}

inline dd ddSqrt(const dd& a) {
  if (a.hi == 0.0) return {0.0, 0.0};
  double s = std::sqrt(a.hi);
  dd s2 = twoProd(s, s);
  double e = (((a.hi - s2.hi) - s2.lo) + a.lo) / (2.0 * s);
  return quickTwoSum(s, e);
}

inline constexpr double kPiHi = 3.141592653589793;
inline constexpr double kPiLo = 2.384626433832795e-16;
inline constexpr double kInvPiHi = 0.3183098861837907;
inline constexpr double kInvPiLo = -2.8462232473254974e-17;
inline constexpr double kHalfPiHi = 1.5707963267948966;
inline constexpr double kHalfPiMid = 1.9231321691639753e-17;
inline constexpr double kHalfPiLo = -1.5579014153003124e-33;

inline constexpr dd kDDPi{kPiHi, kPiLo};
inline constexpr dd kDDInvPi{kInvPiHi, kInvPiLo};
inline constexpr dd kDDHalfPi{kHalfPiHi, kHalfPiMid};

// sin/cos of a double-double angle of any magnitude. Reduces modulo pi/2
// with a three-term Cody-Waite split, then sums the Taylor series on
// |r| <= pi/4 in dd. Good to ~1e-31 relative as long as the quotient
// fits a double exactly (|theta| <~ 1e15, far beyond any phase we form).
struct SinCos {
  dd sin;
  dd cos;
};

inline SinCos ddSinCosReduced(const dd& r) {
  // Taylor on |r| <= pi/4 + slack
  dd r2 = ddMul(r, r);
  dd s{0.0, 0.0};
  dd c{1.0, 0.0};
  dd term = r;  // r^(2n+1)/(2n+1)!
  s = term;
  for (int n = 1; n <= 14; ++n) {
    term = ddMul(term, r2);
    term = ddDiv(term, -static_cast<double>(2 * n) * (2 * n + 1));
    s = ddAdd(s, term);
    if (std::abs(term.hi) < 1e-35) break;
  }
  dd termc{1.0, 0.0};
  for (int n = 1; n <= 14; ++n) {
    termc = ddMul(termc, r2);
    termc = ddDiv(termc, -static_cast<double>(2 * n) * (2 * n - 1));
    c = ddAdd(c, termc);
    if (std::abs(termc.hi) < 1e-35) break;
  }
  return {s, c};
}

inline SinCos ddSinCos(const dd& theta) {
  double q = std::nearbyint(theta.hi / kHalfPiHi);
  dd r = theta;
  if (q != 0.0) {
    dd p = twoProd(q, kHalfPiHi);
    r = ddSub(r, p);
    p = twoProd(q, kHalfPiMid);
    r = ddSub(r, p);
    r = ddAdd(r, -q * kHalfPiLo);
  }
  // one corrective step if reduction landed just outside [-pi/4, pi/4]
  if (r.hi > 0.25 * kPiHi * 1.0000001) {
    r = ddSub(r, kDDHalfPi);
    q += 1.0;
  } else if (r.hi < -0.25 * kPiHi * 1.0000001) {
    r = ddAdd(r, kDDHalfPi);
    q -= 1.0;
  }
  SinCos sc = ddSinCosReduced(r);
  long long quad = static_cast<long long>(std::fmod(q, 4.0));
  if (quad < 0) quad += 4;
  switch (quad) {
    case 0: return sc;
    case 1: return {sc.cos, ddNeg(sc.sin)};
    case 2: return {ddNeg(sc.sin), ddNeg(sc.cos)};
    default: return {ddNeg(sc.cos), sc.sin};
  }
}

}  // namespace clothoid::detail
