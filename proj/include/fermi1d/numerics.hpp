#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "fermi1d/error.hpp"

namespace fermi1d::numerics {

/// Relative tolerance requested from the adaptive quadrature.
inline constexpr double kQuadRelTol = 1e-12;
/// Relative error above which an integral is reported as failed.
inline constexpr double kQuadFailTol = 1e-9;

/// Adaptive 31-point Gauss-Kronrod integral of f over [a, b].
///
/// Throws QuadratureFailure (tagged with `what`) when the error estimate
/// cannot be brought below kQuadFailTol relative to |I| (or an absolute floor
/// `abs_floor`).
template <class F>
double integrate(F&& f, double a, double b, const char* what,
                 double abs_floor = 1e-300) {
  if (a == b) return 0.0;
  // Integrate over [0, 1]: the library's error estimate has a floor that
  // depends on the interval length, which misreports short intervals.
  const double width = b - a;
  auto unit = [&](double t) { return f(a + width * t) * width; };
  double err = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      unit, 0.0, 1.0, 20, kQuadRelTol, &err);
  if (!std::isfinite(value) || err > kQuadFailTol * std::abs(value) + abs_floor) {
    throw QuadratureFailure(std::string(what) + ": adaptive quadrature did not converge (estimate " +
                            std::to_string(value) + ", error " + std::to_string(err) + ")");
  }
  return value;
}

/// Bracketed root of f on [lo, hi] by TOMS 748 (bisection/secant/inverse
/// cubic hybrid), converged to full double precision.
template <class F>
double find_root(F&& f, double lo, double hi, const char* what) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw RootFailure(std::string(what) + ": root not bracketed");
  }
  std::uintmax_t iters = 200;
  const auto tol = boost::math::tools::eps_tolerance<double>(52);
  const auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, iters);
  if (iters >= 200) {
    throw RootFailure(std::string(what) + ": root solver hit the iteration limit");
  }
  return 0.5 * (a + b);
}

/// Composite trapezoid rule over a (possibly nonuniform) grid.
double trapezoid(std::span<const double> xs, std::span<const double> ys);

/// Four-point Lagrange interpolation of samples ys on the uniform grid
/// lo + i*h; 0 outside [lo, lo + (n-1) h].
double cubic_interpolate(double lo, double h, std::span<const double> ys, double x);

/// Uniform grid of `points` values spanning [lo, hi] inclusive.
std::vector<double> linspace(double lo, double hi, std::size_t points);

}  // namespace fermi1d::numerics
