#include "g1_fit.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <numbers>
#include <thread>

#include "curve.hpp"
#include "gfresnel.hpp"

namespace clothoid {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Guess-plane coefficients of the root surface A(dTheta, dPhi).
constexpr double kGuessTheta = 2.4674;
constexpr double kGuessPhi = 5.2478;

void parallelRows(int rows, const std::function<void(int)>& body) {
  unsigned hw = std::thread::hardware_concurrency();
  unsigned nthreads = std::min<unsigned>(hw == 0 ? 1 : hw, static_cast<unsigned>(rows));
  if (nthreads <= 1) {
    for (int i = 0; i < rows; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (unsigned t = 0; t < nthreads; ++t) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < rows; i = next.fetch_add(1)) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

namespace detail {

ThetaEval thetaEval(double A, double dTheta, double dPhi) {
  double x[3], y[3];
  evalXYRaw(2.0 * A, dTheta - A, dPhi, 2, x, y);
  return {y[0], x[2] - x[1], x[0]};
}

}  // namespace detail

double normalizeAngle(double phi) {
  if (!std::isfinite(phi)) throw std::domain_error("normalizeAngle: non-finite angle");
  if (std::abs(phi) > 4.0 * kPi) phi = std::remainder(phi, kTwoPi);
  while (phi > kPi) phi -= kTwoPi;
  while (phi < -kPi) phi += kTwoPi;
  return phi;
}

ReducedAngles reduceAngles(const HermiteData& data) {
  for (double v : {data.x0, data.y0, data.theta0, data.x1, data.y1, data.theta1})
    if (!std::isfinite(v)) throw std::domain_error("reduceAngles: non-finite input");
  double dx = data.x1 - data.x0;
  double dy = data.y1 - data.y0;
  double r = std::hypot(dx, dy);
  if (r == 0.0) throw std::domain_error("reduceAngles: coincident endpoints");
  double phi = std::atan2(dy, dx);
  return {r, phi, normalizeAngle(data.theta1 - data.theta0), normalizeAngle(data.theta0 - phi)};
}

double theta(double A, double dTheta, double dPhi) {
  double x[1], y[1];
  detail::evalXYRaw(2.0 * A, dTheta - A, dPhi, 0, x, y);
  return y[0];
}

double thetaPrime(double A, double dTheta, double dPhi) {
  double x[3], y[3];
  detail::evalXYRaw(2.0 * A, dTheta - A, dPhi, 2, x, y);
  return x[2] - x[1];
}

double guessA(double dTheta, double dPhi) { return kGuessTheta * dTheta + kGuessPhi * dPhi; }

SolverReport findA(double aGuess, double dTheta, double dPhi, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("findA: tolerance must be positive");
  double A = aGuess;
  detail::ThetaEval ev{};
  for (int iter = 0; iter <= kNewtonIterationCap; ++iter) {
    ev = detail::thetaEval(A, dTheta, dPhi);
    if (std::abs(ev.g) <= tol) return {A, iter, std::abs(ev.g), true};
    if (ev.gPrime == 0.0 || iter == kNewtonIterationCap) return {A, iter, std::abs(ev.g), false};
    A -= ev.g / ev.gPrime;
  }
  return {A, kNewtonIterationCap, std::abs(ev.g), false};
}

std::pair<ClothoidSegment, SolverReport> buildClothoid(const HermiteData& data, double tol) {
  ReducedAngles red = reduceAngles(data);
  SolverReport rep = findA(guessA(red.dTheta, red.dPhi), red.dTheta, red.dPhi, tol);
  if (!rep.converged) throw SolverError("buildClothoid: Newton did not converge", rep);
  double h = detail::thetaEval(rep.aRoot, red.dTheta, red.dPhi).h;
  double length = red.r / h;
  if (!(length > 0.0)) throw SolverError("buildClothoid: root yields non-positive length", rep);
  ClothoidSegment seg;
  seg.x0 = data.x0;
  seg.y0 = data.y0;
  seg.theta0 = data.theta0;
  seg.length = length;
  seg.kappa = (red.dTheta - rep.aRoot) / length;
  seg.kappaPrime = 2.0 * rep.aRoot / (length * length);
  return {seg, rep};
}

std::vector<AtlasCell> buildGrid(int n, int m) {
  if (n < 2 || m < 2) throw std::invalid_argument("buildGrid: n and m must be at least 2");
  const int side = n + 1;
  std::vector<AtlasCell> cells(static_cast<size_t>(side) * side);
  std::vector<double> guesses(m + 1);
  for (int j = 0; j <= m; ++j) guesses[j] = (static_cast<double>(j) / m) * 40.0 - 20.0;

  parallelRows(side, [&](int i) {
    double dPhi = kTwoPi * i / n - kPi;
    std::vector<double> th(m + 1);
    for (int j = 0; j <= n; ++j) {
      double dTheta = kTwoPi * j / n - kPi;
      AtlasCell cell;
      cell.dPhi = dPhi;
      cell.dTheta = dTheta;
      for (int q = 0; q <= m; ++q) th[q] = theta(guesses[q], dTheta, dPhi);
      for (int q = 1; q <= m; ++q) {
        if (th[q] * th[q - 1] > 0.0) continue;
        SolverReport rep = findA(0.5 * (guesses[q] + guesses[q - 1]), dTheta, dPhi);
        if (!rep.converged) continue;
        double h = detail::thetaEval(rep.aRoot, dTheta, dPhi).h;
        double length = 1.0 / h;
        if (!(length > 0.0)) continue;
        bool better = !cell.solved || length < cell.length ||
                      (length == cell.length && std::abs(rep.aRoot) < std::abs(cell.aRoot));
        if (better) {
          cell.aRoot = rep.aRoot;
          cell.length = length;
          cell.solved = true;
        }
      }
      cells[static_cast<size_t>(i) * side + j] = cell;
    }
  });
  return cells;
}

double endpointResidual(const HermiteData& data, const ClothoidSegment& seg) {
  CurvePoint end = evalAt(seg, seg.length);
  return std::hypot(end.x - data.x1, end.y - data.y1);
}

NewtonStats newtonStats(int n, double tol) {
  if (n < 2) throw std::invalid_argument("newtonStats: n must be at least 2");
  NewtonStats stats;
  stats.counts.assign(kNewtonIterationCap + 1, 0);
  stats.cells = static_cast<long long>(n) * n;

  std::vector<std::vector<long long>> rowCounts(n);
  std::vector<long long> rowFailures(n, 0);
  parallelRows(n, [&](int i) {
    std::vector<long long> counts(kNewtonIterationCap + 1, 0);
    double dPhi = -kPi + kTwoPi * (i + 0.5) / n;
    for (int j = 0; j < n; ++j) {
      double dTheta = -kPi + kTwoPi * (j + 0.5) / n;
      SolverReport rep = findA(guessA(dTheta, dPhi), dTheta, dPhi, tol);
      if (rep.converged)
        ++counts[rep.iterations];
      else
        ++rowFailures[i];
    }
    rowCounts[i] = std::move(counts);
  });

  long long total = 0;
  long long converged = 0;
  for (int i = 0; i < n; ++i) {
    stats.failures += rowFailures[i];
    for (int it = 0; it <= kNewtonIterationCap; ++it) {
      stats.counts[it] += rowCounts[i][it];
      total += static_cast<long long>(it) * rowCounts[i][it];
      converged += rowCounts[i][it];
      if (rowCounts[i][it] > 0) stats.maxIterations = std::max(stats.maxIterations, it);
    }
  }
  stats.average = converged > 0 ? static_cast<double>(total) / converged : 0.0;
  return stats;
}

}  // namespace clothoid
