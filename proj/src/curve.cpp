#include "curve.hpp"

#include <cmath>
#include <stdexcept>

#include "gfresnel.hpp"

namespace clothoid {

CurvePoint evalAt(const ClothoidSegment& seg, double s) {
  if (!std::isfinite(s)) throw std::domain_error("evalAt: non-finite arc length");
  CurvePoint pt;
  pt.s = s;
  pt.extrapolated = s < 0.0 || s > seg.length;
  double x[1], y[1];
  detail::evalXYRaw(seg.kappaPrime * s * s, seg.kappa * s, seg.theta0, 0, x, y);
  pt.x = seg.x0 + s * x[0];
  pt.y = seg.y0 + s * y[0];
  pt.theta = seg.theta0 + s * (seg.kappa + 0.5 * seg.kappaPrime * s);
  pt.kappa = seg.kappa + seg.kappaPrime * s;
  return pt;
}

std::vector<CurvePoint> sample(const ClothoidSegment& seg, int n) {
  if (n < 2) throw std::invalid_argument("sample: need at least two points");
  std::vector<CurvePoint> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) pts.push_back(evalAt(seg, seg.length * i / (n - 1)));
  return pts;
}

ClothoidSpline fitSpline(const std::vector<Waypoint>& waypoints, double tol) {
  if (waypoints.size() < 2) throw std::invalid_argument("fitSpline: need at least two waypoints");
  ClothoidSpline spline;
  spline.segments.reserve(waypoints.size() - 1);
  for (std::size_t i = 0; i + 1 < waypoints.size(); ++i) {
    const Waypoint& a = waypoints[i];
    const Waypoint& b = waypoints[i + 1];
    HermiteData data{a.x, a.y, a.theta, b.x, b.y, b.theta};
    try {
      spline.segments.push_back(buildClothoid(data, tol).first);
    } catch (const std::exception& e) {
      throw SplineError("fitSpline: pair " + std::to_string(i) + ": " + e.what(), i);
    }
  }
  return spline;
}

}  // namespace clothoid
