#pragma once

#include <vector>

#include "compensated.hpp"

namespace clothoid {

// C(t) = int_0^t cos(pi/2 u^2) du,  S(t) = int_0^t sin(pi/2 u^2) du
struct FresnelPair {
  double c{0.0};
  double s{0.0};
};

// C_k(t) = int_0^t u^k cos(pi/2 u^2) du and the sine counterpart,
// for k = 0..order.
struct MomentaTable {
  double t{0.0};
  int order{0};
  std::vector<double> cMoments;
  std::vector<double> sMoments;
};

inline constexpr int kMaxMomentaOrder = 32;

/// Fresnel integrals in the Abramowitz & Stegun normalization.
/// Absolute error below 1e-13 for all finite arguments.
FresnelPair fresnel(double t);

/// Momenta table up to `order` (<= kMaxMomentaOrder), seeded with the
/// order-0/1 closed forms and filled by the integration-by-parts
/// recurrence, carried in double-double to keep high orders near 1 ulp.
MomentaTable fresnelMomenta(double t, int order);

namespace detail {

// C(x1)-C(x0), S(x1)-S(x0) for double-double arguments. The lo parts
// matter only through the quadratic phase. When both endpoints are in
// the asymptotic branch the constant 0.5 never enters, so the result
// keeps full precision even for differences of order 1e-3 at x ~ 1e2.
void fresnelDelta(const dd& x0, const dd& x1, double* dc, double* ds);

}  // namespace detail

}  // namespace clothoid
