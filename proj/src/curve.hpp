#pragma once

#include <vector>

#include "g1_fit.hpp"

namespace clothoid {

struct CurvePoint {
  double s{0.0};
  double x{0.0}, y{0.0};
  double theta{0.0};
  double kappa{0.0};
  bool extrapolated{false};  // s outside [0, length]; evaluated anyway
};

struct Waypoint {
  double x{0.0}, y{0.0};
  double theta{0.0};
};

struct ClothoidSpline {
  std::vector<ClothoidSegment> segments;
};

class SplineError : public std::runtime_error {
 public:
  SplineError(const std::string& what, std::size_t pairIndex)
      : std::runtime_error(what), pairIndex_(pairIndex) {}
  std::size_t pairIndex() const { return pairIndex_; }

 private:
  std::size_t pairIndex_;
};

/// Point on the segment at arc length s, via
/// x(s) = x0 + s X_0(kappa' s^2, kappa s, theta0) and the sine twin.
CurvePoint evalAt(const ClothoidSegment& seg, double s);

/// n >= 2 points at uniform arc-length spacing over [0, length].
std::vector<CurvePoint> sample(const ClothoidSegment& seg, int n);

/// One buildClothoid per consecutive waypoint pair. A failing pair
/// raises SplineError carrying its index.
ClothoidSpline fitSpline(const std::vector<Waypoint>& waypoints, double tol = kDefaultTolerance);

}  // namespace clothoid
