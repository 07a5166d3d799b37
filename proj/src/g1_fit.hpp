#pragma once

#include <stdexcept>
#include <vector>

namespace clothoid {

struct HermiteData {
  double x0{0.0}, y0{0.0};
  double theta0{0.0};
  double x1{0.0}, y1{0.0};
  double theta1{0.0};
};

struct ReducedAngles {
  double r{0.0};       // chord length
  double phi{0.0};     // chord angle
  double dTheta{0.0};  // theta1 - theta0, normalized
  double dPhi{0.0};    // theta0 - phi, normalized
};

struct SolverReport {
  double aRoot{0.0};
  int iterations{0};
  double residual{0.0};
  bool converged{false};
};

struct ClothoidSegment {
  double x0{0.0}, y0{0.0};
  double theta0{0.0};
  double kappa{0.0};       // curvature at s = 0
  double kappaPrime{0.0};  // curvature rate, constant along the segment
  double length{0.0};
};

struct AtlasCell {
  double dPhi{0.0};
  double dTheta{0.0};
  double aRoot{0.0};
  double length{0.0};
  bool solved{false};
};

struct NewtonStats {
  std::vector<long long> counts;  // counts[i] = cells converged after i updates
  long long cells{0};
  long long failures{0};
  double average{0.0};
  int maxIterations{0};
};

class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, const SolverReport& report)
      : std::runtime_error(what), report_(report) {}
  const SolverReport& report() const { return report_; }

 private:
  SolverReport report_;
};

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr int kNewtonIterationCap = 50;

/// Wraps an angle into [-pi, pi] by whole turns.
double normalizeAngle(double phi);

/// Chord/angle reduction of the Hermite data; throws std::domain_error
/// on coincident endpoints.
ReducedAngles reduceAngles(const HermiteData& data);

/// Theta(A; dTheta, dPhi) = int_0^1 sin(A t^2 + (dTheta - A) t + dPhi) dt.
double theta(double A, double dTheta, double dPhi);

/// dTheta/dA, the Newton derivative.
double thetaPrime(double A, double dTheta, double dPhi);

/// Plane fit of the root surface; the Newton starting point.
double guessA(double dTheta, double dPhi);

/// Newton iteration on g(A) = Theta(A; dTheta, dPhi) from aGuess.
SolverReport findA(double aGuess, double dTheta, double dPhi, double tol = kDefaultTolerance);

/// Full G1 Hermite fit. Throws std::domain_error on coincident endpoints
/// and SolverError (carrying the report) when Newton fails or the
/// recovered length is not positive.
std::pair<ClothoidSegment, SolverReport> buildClothoid(const HermiteData& data,
                                                       double tol = kDefaultTolerance);

/// Minimal-length root atlas on the closed (n+1)x(n+1) grid over
/// [-pi,pi]^2, scanning m+1 guesses in [-20, 20] per cell. Cells are in
/// row-major order, dPhi outer. Unsolved cells are data, not errors.
std::vector<AtlasCell> buildGrid(int n, int m);

/// Norm of the position residual of the original nonlinear system,
/// evaluated by tracing the segment to s = length.
double endpointResidual(const HermiteData& data, const ClothoidSegment& seg);

/// Newton iteration histogram over the open n x n angle grid (cell
/// centers; the +-pi boundary is excluded).
NewtonStats newtonStats(int n, double tol = kDefaultTolerance);

namespace detail {

struct ThetaEval {
  double g{0.0};       // Theta at phase dPhi
  double gPrime{0.0};  // dTheta/dA
  double h{0.0};       // Theta at phase dPhi + pi/2
};

// One generalized-Fresnel call yielding g, g', h together.
ThetaEval thetaEval(double A, double dTheta, double dPhi);

}  // namespace detail

}  // namespace clothoid
