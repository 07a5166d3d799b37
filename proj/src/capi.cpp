#include "clothoid/clothoid.h"

#include <cmath>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "curve.hpp"
#include "g1_fit.hpp"

struct clothoid_spline {
  clothoid::ClothoidSpline spline;
};

struct clothoid_atlas {
  int side{0};
  std::vector<clothoid::AtlasCell> cells;
};

namespace {

thread_local std::string g_lastError;

clothoid_status fail(clothoid_status code, const char* msg) {
  g_lastError = msg;
  return code;
}

clothoid_segment toC(const clothoid::ClothoidSegment& s) {
  return {s.x0, s.y0, s.theta0, s.kappa, s.kappaPrime, s.length};
}

clothoid::ClothoidSegment fromC(const clothoid_segment& s) {
  return {s.x0, s.y0, s.theta0, s.kappa, s.kappa_prime, s.length};
}

clothoid_point toC(const clothoid::CurvePoint& p) {
  return {p.s, p.x, p.y, p.theta, p.kappa, p.extrapolated ? 1 : 0};
}

// every entry point funnels through this to map exceptions onto codes
template <typename Fn>
clothoid_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const clothoid::SolverError& e) {
    return fail(CLOTHOID_ERROR_SOLVER, e.what());
  } catch (const clothoid::SplineError& e) {
    return fail(CLOTHOID_ERROR_SOLVER, e.what());
  } catch (const std::domain_error& e) {
    return fail(CLOTHOID_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(CLOTHOID_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CLOTHOID_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CLOTHOID_ERROR_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

const char* clothoid_last_error(void) { return g_lastError.c_str(); }

clothoid_status clothoid_fit_g1(double x0, double y0, double theta0, double x1, double y1,
                                double theta1, double tol, clothoid_segment* seg,
                                clothoid_fit_report* report) {
  if (seg == nullptr) return fail(CLOTHOID_ERROR_INVALID_ARGUMENT, "seg is NULL");
  if (report != nullptr) *report = {};
  return guarded([&]() {
    double effTol = tol > 0.0 ? tol : clothoid::kDefaultTolerance;
    clothoid::HermiteData data{x0, y0, theta0, x1, y1, theta1};
    try {
      auto [segment, rep] = clothoid::buildClothoid(data, effTol);
      *seg = toC(segment);
      if (report != nullptr) *report = {rep.aRoot, rep.iterations, rep.residual, 1};
      return CLOTHOID_OK;
    } catch (const clothoid::SolverError& e) {
      if (report != nullptr) {
        const clothoid::SolverReport& rep = e.report();
        *report = {rep.aRoot, rep.iterations, rep.residual, rep.converged ? 1 : 0};
      }
      throw;
    }
  });
}

clothoid_status clothoid_eval(const clothoid_segment* seg, double s, clothoid_point* pt) {
  if (seg == nullptr || pt == nullptr) return fail(CLOTHOID_ERROR_INVALID_ARGUMENT, "NULL pointer");
  return guarded([&]() {
    *pt = toC(clothoid::evalAt(fromC(*seg), s));
    return CLOTHOID_OK;
  });
}

clothoid_status clothoid_sample(const clothoid_segment* seg, int n, clothoid_point* pts) {
  if (seg == nullptr || pts == nullptr) return fail(CLOTHOID_ERROR_INVALID_ARGUMENT, "NULL pointer");
  return guarded([&]() {
    std::vector<clothoid::CurvePoint> sampled = clothoid::sample(fromC(*seg), n);
    for (int i = 0; i < n; ++i) pts[i] = toC(sampled[i]);
    return CLOTHOID_OK;
  });
}

clothoid_status clothoid_endpoint_residual(const clothoid_segment* seg, double x1, double y1,
                                           double* residual) {
  if (seg == nullptr || residual == nullptr)
    return fail(CLOTHOID_ERROR_INVALID_ARGUMENT, "NULL pointer");
  return guarded([&]() {
    clothoid::CurvePoint end = clothoid::evalAt(fromC(*seg), seg->length);
    *residual = std::hypot(end.x - x1, end.y - y1);
    return CLOTHOID_OK;
  });
}

clothoid_status clothoid_spline_fit(const double* waypoints_xytheta, int count, double tol,
                                    clothoid_spline** out) {
  if (out == nullptr) return fail(CLOTHOID_ERROR_INVALID_ARGUMENT, "out is NULL");
  *out = nullptr;
  if (waypoints_xytheta == nullptr) return fail(CLOTHOID_ERROR_INVALID_ARGUMENT, "waypoints is NULL");
  return guarded([&]() {
    std::vector<clothoid::Waypoint> pts(count > 0 ? count : 0);
    for (int i = 0; i < count; ++i)
      pts[i] = {waypoints_xytheta[3 * i], waypoints_xytheta[3 * i + 1],
                waypoints_xytheta[3 * i + 2]};
    double effTol = tol > 0.0 ? tol : clothoid::kDefaultTolerance;
    auto handle = std::make_unique<clothoid_spline>();
    handle->spline = clothoid::fitSpline(pts, effTol);
    *out = handle.release();
    return CLOTHOID_OK;
  });
}

int clothoid_spline_size(const clothoid_spline* spline) {
  return spline == nullptr ? 0 : static_cast<int>(spline->spline.segments.size());
}

clothoid_status clothoid_spline_segment(const clothoid_spline* spline, int index,
                                        clothoid_segment* seg) {
  if (spline == nullptr || seg == nullptr)
    return fail(CLOTHOID_ERROR_INVALID_ARGUMENT, "NULL pointer");
  if (index < 0 || index >= static_cast<int>(spline->spline.segments.size()))
    return fail(CLOTHOID_ERROR_INVALID_ARGUMENT, "segment index out of range");
  *seg = toC(spline->spline.segments[index]);
  return CLOTHOID_OK;
}

void clothoid_spline_destroy(clothoid_spline* spline) { delete spline; }

clothoid_status clothoid_atlas_build(int n, int m, clothoid_atlas** out) {
  if (out == nullptr) return fail(CLOTHOID_ERROR_INVALID_ARGUMENT, "out is NULL");
  *out = nullptr;
  return guarded([&]() {
    auto handle = std::make_unique<clothoid_atlas>();
    handle->cells = clothoid::buildGrid(n, m);
    handle->side = n + 1;
    *out = handle.release();
    return CLOTHOID_OK;
  });
}

int clothoid_atlas_size(const clothoid_atlas* atlas) {
  return atlas == nullptr ? 0 : static_cast<int>(atlas->cells.size());
}

clothoid_status clothoid_atlas_cell(const clothoid_atlas* atlas, int index,
                                    clothoid_grid_cell* cell) {
  if (atlas == nullptr || cell == nullptr)
    return fail(CLOTHOID_ERROR_INVALID_ARGUMENT, "NULL pointer");
  if (index < 0 || index >= static_cast<int>(atlas->cells.size()))
    return fail(CLOTHOID_ERROR_INVALID_ARGUMENT, "cell index out of range");
  const clothoid::AtlasCell& c = atlas->cells[index];
  *cell = {c.dPhi, c.dTheta, c.aRoot, c.length, c.solved ? 1 : 0};
  return CLOTHOID_OK;
}

void clothoid_atlas_destroy(clothoid_atlas* atlas) { delete atlas; }

clothoid_status clothoid_newton_stats_run(int n, double tol, clothoid_newton_stats* out) {
  if (out == nullptr) return fail(CLOTHOID_ERROR_INVALID_ARGUMENT, "out is NULL");
  return guarded([&]() {
    double effTol = tol > 0.0 ? tol : clothoid::kDefaultTolerance;
    clothoid::NewtonStats stats = clothoid::newtonStats(n, effTol);
    std::memset(out, 0, sizeof(*out));
    for (int i = 0; i <= CLOTHOID_STATS_MAX_ITER && i < static_cast<int>(stats.counts.size()); ++i)
      out->counts[i] = stats.counts[i];
    out->cells = stats.cells;
    out->failures = stats.failures;
    out->average = stats.average;
    out->max_iterations = stats.maxIterations;
    return CLOTHOID_OK;
  });
}

double clothoid_guess_a(double d_theta, double d_phi) { return clothoid::guessA(d_theta, d_phi); }

double clothoid_normalize_angle(double phi) { return clothoid::normalizeAngle(phi); }

}  // extern "C"
