#pragma once

#include <vector>

namespace clothoid {

// X_k(a,b,c) = int_0^1 t^k cos(a/2 t^2 + b t + c) dt, Y_k the sine twin.
struct GFresnelValues {
  double a{0.0};
  double b{0.0};
  double c{0.0};
  int order{0};
  std::vector<double> x;
  std::vector<double> y;
};

// Dispatch threshold on |a| between the Lommel series and the
// Fresnel-momenta path, and the series order used below it. See the
// remainder bound (a/2)^(2p) cosh(a): at |a| = 1e-2, p = 5 this is ~1e-23.
inline constexpr double kSmallRegimeThreshold = 1e-2;
inline constexpr int kSmallSeriesOrder = 5;
inline constexpr int kMaxPublicOrder = 3;
inline constexpr int kMaxZeroOrder = 32;

// Widest |a| each regime accepts when called directly (cross-regime
// validation); evalXY itself always dispatches at kSmallRegimeThreshold.
inline constexpr double kSmallRegimeCeiling = 0.1;
inline constexpr double kLargeRegimeFloor = 1e-4;

/// Generalized Fresnel integrals for orders 0..k (k <= 3). Dispatches on
/// |a| and applies the phase rotation by c last.
GFresnelValues evalXY(double a, double b, double c, int k);

/// Fresnel-momenta route, |a| >= threshold required. Phase 0.
GFresnelValues evalXYaLarge(double a, double b, int k);

/// Series in a about a = 0 with p+1 terms, |a| < threshold required. Phase 0.
GFresnelValues evalXYaSmall(double a, double b, int k, int p);

/// Closed forms at a = 0 via reduced Lommel functions. Phase 0, k <= 32.
GFresnelValues evalXYaZero(double b, int k);

/// Reduced Lommel function w_{mu,nu}(b) = sum_n (-b^2)^n / alpha_{n+1}.
/// Throws std::domain_error if a factor (mu+2m-1)^2 - nu^2 vanishes.
double rLommel(double mu, double nu, double b);

namespace detail {

// Unvalidated kernels writing x[0..k], y[0..k]; used on hot paths.
void evalXYRaw(double a, double b, double c, int k, double* x, double* y);
void evalXYLargeRaw(double a, double b, int k, double* x, double* y);
void evalXYSmallRaw(double a, double b, int k, int p, double* x, double* y);
void evalXYZeroRaw(double b, int k, double* x, double* y);  // k <= 45

}  // namespace detail

}  // namespace clothoid
