#pragma once

// Test-only reference machinery, independent of the library code paths:
// adaptive Gauss-Legendre quadrature in long double plus direct series
// references for the special functions under test.

#include <cmath>
#include <functional>

namespace oracle {

using Fn = std::function<long double(long double)>;

namespace detail {

inline constexpr long double kNodes[15] = {
    -0.9879925180204854284895657L, -0.9372733924007059043077589L,
    -0.8482065834104272162006483L, -0.7244177313601700474161861L,
    -0.5709721726085388475372267L, -0.3941513470775633698972074L,
    -0.2011940939974345223006283L, 0.0L,
    0.2011940939974345223006283L,  0.3941513470775633698972074L,
    0.5709721726085388475372267L,  0.7244177313601700474161861L,
    0.8482065834104272162006483L,  0.9372733924007059043077589L,
    0.9879925180204854284895657L};

inline constexpr long double kWeights[15] = {
    0.03075324199611726835462839L, 0.07036604748810812470926742L,
    0.1071592204671719350118695L,  0.1395706779261543144478048L,
    0.1662692058169939335532009L,  0.1861610000155622110268006L,
    0.1984314853271115764561183L,  0.2025782419255612728806202L,
    0.1984314853271115764561183L,  0.1861610000155622110268006L,
    0.1662692058169939335532009L,  0.1395706779261543144478048L,
    0.1071592204671719350118695L,  0.07036604748810812470926742L,
    0.03075324199611726835462839L};

inline long double gauss15(const Fn& f, long double a, long double b) {
  long double half = 0.5L * (b - a);
  long double mid = 0.5L * (a + b);
  long double sum = 0.0L;
  for (int i = 0; i < 15; ++i) sum += kWeights[i] * f(mid + half * kNodes[i]);
  return half * sum;
}

inline long double adaptive(const Fn& f, long double a, long double b, long double tol,
                            long double floor, int depth) {
  long double whole = gauss15(f, a, b);
  long double m = 0.5L * (a + b);
  long double split = gauss15(f, a, m) + gauss15(f, m, b);
  // `floor` is relative to the global magnitude: a panel-local relative
  // test starves near the integrand's zero crossings
  if (std::abs(split - whole) <= std::max(tol, floor) || depth >= 18) return split;
  return adaptive(f, a, m, 0.5L * tol, floor, depth + 1) +
         adaptive(f, m, b, 0.5L * tol, floor, depth + 1);
}

}  // namespace detail

/// Adaptive 15-point Gauss-Legendre with bisection on a two-panel error
/// estimate; long double nodes and accumulation.
inline long double integrate(const Fn& f, long double a, long double b,
                             long double tol = 1e-15L) {
  if (a == b) return 0.0L;
  long double lo = std::min(a, b);
  long double hi = std::max(a, b);
  // coarse magnitude estimate for the roundoff floor
  long double scale = 0.0L;
  for (int i = 0; i < 8; ++i) {
    long double pa = lo + (hi - lo) * i / 8.0L;
    long double pb = lo + (hi - lo) * (i + 1) / 8.0L;
    scale += std::abs(detail::gauss15(f, pa, pb));
  }
  long double floor = 1e-17L * std::max(scale, 1.0L);
  long double value = detail::adaptive(f, lo, hi, tol, floor, 0);
  return a <= b ? value : -value;
}

inline long double pi() { return 3.14159265358979323846264338328L; }

/// C_k(t) by quadrature of the defining integral.
inline double fresnelC(int k, double t) {
  return static_cast<double>(integrate(
      [k](long double u) { return std::pow(u, k) * std::cos(0.5L * pi() * u * u); }, 0.0L, t));
}

inline double fresnelS(int k, double t) {
  return static_cast<double>(integrate(
      [k](long double u) { return std::pow(u, k) * std::sin(0.5L * pi() * u * u); }, 0.0L, t));
}

/// X_k(a,b,c) by quadrature.
inline double xk(int k, double a, double b, double c = 0.0) {
  return static_cast<double>(integrate(
      [=](long double u) {
        return std::pow(u, k) * std::cos(0.5L * a * u * u + (long double)b * u + (long double)c);
      },
      0.0L, 1.0L));
}

inline double yk(int k, double a, double b, double c = 0.0) {
  return static_cast<double>(integrate(
      [=](long double u) {
        return std::pow(u, k) * std::sin(0.5L * a * u * u + (long double)b * u + (long double)c);
      },
      0.0L, 1.0L));
}

/// Reduced Lommel function by direct long double summation of the series,
/// nTerms terms (50 is far past convergence for |b| <= ~5).
inline long double lommelW(double mu, double nu, double b, int nTerms = 50) {
  long double sum = 0.0L;
  long double num = 1.0L;  // (-b^2)^n
  for (int n = 0; n < nTerms; ++n) {
    long double alpha = 1.0L;
    for (int m = 1; m <= n + 1; ++m) {
      long double f = mu + 2.0L * m - 1.0L;
      alpha *= f * f - (long double)nu * nu;
    }
    sum += num / alpha;
    num *= -(long double)b * b;
  }
  return sum;
}

}  // namespace oracle
