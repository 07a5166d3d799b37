/*
 * clothoid: G1 Hermite interpolation with a single clothoid segment.
 *
 * Given two endpoints and two tangent angles the library returns the
 * curvature kappa, the curvature rate kappa', and the length L of the
 * connecting clothoid, and can evaluate and sample the fitted curve.
 *
 * All functions returning clothoid_status report failure through the
 * status code; clothoid_last_error() gives a thread-local message for
 * the most recent failing call on the calling thread. Angles are in
 * radians, lengths in the caller's units.
 */

#ifndef CLOTHOID_H
#define CLOTHOID_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32) && defined(CLOTHOID_SHARED)
#ifdef CLOTHOID_BUILD
#define CLOTHOID_API __declspec(dllexport)
#else
#define CLOTHOID_API __declspec(dllimport)
#endif
#else
#define CLOTHOID_API
#endif

typedef enum clothoid_status {
  CLOTHOID_OK = 0,
  CLOTHOID_ERROR_INVALID_ARGUMENT = 1,
  CLOTHOID_ERROR_SOLVER = 2,
  CLOTHOID_ERROR_INTERNAL = 3
} clothoid_status;

/* Fitted segment: start pose plus kappa, kappa', L. */
typedef struct clothoid_segment {
  double x0, y0;
  double theta0;
  double kappa;
  double kappa_prime;
  double length;
} clothoid_segment;

/* Newton outcome: root A of g, update count, |g(A)| at exit. */
typedef struct clothoid_fit_report {
  double a_root;
  int iterations;
  double residual;
  int converged;
} clothoid_fit_report;

typedef struct clothoid_point {
  double s;
  double x, y;
  double theta;
  double kappa;
  int extrapolated; /* nonzero when s was outside [0, length] */
} clothoid_point;

typedef struct clothoid_grid_cell {
  double d_phi;
  double d_theta;
  double a_root;
  double length;
  int solved;
} clothoid_grid_cell;

#define CLOTHOID_STATS_MAX_ITER 50

typedef struct clothoid_newton_stats {
  long long counts[CLOTHOID_STATS_MAX_ITER + 1]; /* counts[i]: converged after i updates */
  long long cells;
  long long failures;
  double average;
  int max_iterations;
} clothoid_newton_stats;

/* Message for the most recent failing call on this thread. */
CLOTHOID_API const char* clothoid_last_error(void);

/* G1 Hermite fit from (x0,y0,theta0) to (x1,y1,theta1). tol <= 0 picks
 * the default 1e-10. report may be NULL. On CLOTHOID_ERROR_SOLVER the
 * report (when given) still carries the Newton state. */
CLOTHOID_API clothoid_status clothoid_fit_g1(double x0, double y0, double theta0, double x1,
                                             double y1, double theta1, double tol,
                                             clothoid_segment* seg, clothoid_fit_report* report);

/* Point at arc length s; s outside [0, length] extrapolates. */
CLOTHOID_API clothoid_status clothoid_eval(const clothoid_segment* seg, double s,
                                           clothoid_point* pt);

/* n >= 2 uniformly spaced points into caller storage pts[0..n-1]. */
CLOTHOID_API clothoid_status clothoid_sample(const clothoid_segment* seg, int n,
                                             clothoid_point* pts);

/* Distance from the segment end at s = length to (x1, y1). */
CLOTHOID_API clothoid_status clothoid_endpoint_residual(const clothoid_segment* seg, double x1,
                                                        double y1, double* residual);

/* Piecewise-G1 spline through waypoints (x, y, theta) * count. */
typedef struct clothoid_spline clothoid_spline;

CLOTHOID_API clothoid_status clothoid_spline_fit(const double* waypoints_xytheta, int count,
                                                 double tol, clothoid_spline** out);
CLOTHOID_API int clothoid_spline_size(const clothoid_spline* spline);
CLOTHOID_API clothoid_status clothoid_spline_segment(const clothoid_spline* spline, int index,
                                                     clothoid_segment* seg);
CLOTHOID_API void clothoid_spline_destroy(clothoid_spline* spline);

/* Minimal-length root atlas on the closed (n+1)^2 grid over [-pi,pi]^2,
 * scanning m+1 starting values in [-20, 20] per cell. Cells are indexed
 * row-major with d_phi as the outer coordinate. */
typedef struct clothoid_atlas clothoid_atlas;

CLOTHOID_API clothoid_status clothoid_atlas_build(int n, int m, clothoid_atlas** out);
CLOTHOID_API int clothoid_atlas_size(const clothoid_atlas* atlas);
CLOTHOID_API clothoid_status clothoid_atlas_cell(const clothoid_atlas* atlas, int index,
                                                 clothoid_grid_cell* cell);
CLOTHOID_API void clothoid_atlas_destroy(clothoid_atlas* atlas);

/* Newton iteration histogram over the open n x n angle grid. */
CLOTHOID_API clothoid_status clothoid_newton_stats_run(int n, double tol,
                                                       clothoid_newton_stats* out);

/* Plane-fit starting value for the Newton iteration. */
CLOTHOID_API double clothoid_guess_a(double d_theta, double d_phi);

/* Wrap an angle into [-pi, pi] by whole turns. */
CLOTHOID_API double clothoid_normalize_angle(double phi);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CLOTHOID_H */
