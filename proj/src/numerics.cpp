#include "fermi1d/numerics.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace fermi1d::numerics {

double trapezoid(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("trapezoid: size mismatch");
  double sum = 0.0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    sum += 0.5 * (xs[i] - xs[i - 1]) * (ys[i] + ys[i - 1]);
  }
  return sum;
}

std::vector<double> linspace(double lo, double hi, std::size_t points) {
  std::vector<double> out(points);
  if (points == 1) {
    out[0] = lo;
    return out;
  }
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) out[i] = lo + step * static_cast<double>(i);
  out.back() = hi;
  return out;
}

double cubic_interpolate(double lo, double h, std::span<const double> ys, double x) {
  const std::size_t n = ys.size();
  const double u = (x - lo) / h;
  if (n < 4 || u < 0.0 || u > static_cast<double>(n - 1)) return 0.0;
  // Stencil i0..i0+3 with x between the middle two nodes where possible.
  const auto cell = static_cast<std::ptrdiff_t>(std::floor(u));
  const std::ptrdiff_t i0 = std::clamp<std::ptrdiff_t>(cell - 1, 0, static_cast<std::ptrdiff_t>(n) - 4);
  const double t = u - static_cast<double>(i0);
  double sum = 0.0;
  for (int j = 0; j < 4; ++j) {
    double w = 1.0;
    for (int k = 0; k < 4; ++k) {
      if (k != j) w *= (t - k) / (j - k);
    }
    sum += w * ys[static_cast<std::size_t>(i0 + j)];
  }
  return sum;
}

}  // namespace fermi1d::numerics
