#include "fermi1d/reference.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fermi1d/error.hpp"
#include "fermi1d/numerics.hpp"

namespace fermi1d {

namespace {

struct RawSolution {
  std::vector<double> energies;
  std::vector<std::vector<double>> orbitals;  // full grid, zero end nodes
};

// Lowest k eigenpairs of -(hbar^2/2m) D2 + v on lo + i h, i = 0..points-1.
RawSolution solve_fd(const PotentialModel& pot, double hbar, double mass, double lo, double hi,
                     std::size_t points, int k) {
  const std::size_t n = points - 2;
  const double h = (hi - lo) / static_cast<double>(points - 1);
  const double kin = hbar * hbar / (2.0 * mass * h * h);
  std::vector<double> diag(n);
  std::vector<double> off(n, -kin);
  for (std::size_t i = 0; i < n; ++i) diag[i] = 2.0 * kin + pot.value(lo + h * static_cast<double>(i + 1));
  std::vector<double> w(n);
  std::vector<double> z(n * static_cast<std::size_t>(k));
  std::vector<lapack_int> support(2 * static_cast<std::size_t>(k));
  lapack_int found = 0;
  const lapack_int info =
      LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', static_cast<lapack_int>(n), diag.data(), off.data(), 0.0,
                     0.0, 1, k, 0.0, &found, w.data(), z.data(), static_cast<lapack_int>(n), support.data());
  if (info != 0 || found != k) {
    throw NumericalError("solve_schrodinger: tridiagonal eigensolver failed (info " + std::to_string(info) + ")");
  }
  RawSolution out;
  for (int j = 0; j < k; ++j) {
    out.energies.push_back(w[static_cast<std::size_t>(j)]);
    std::vector<double> psi(points, 0.0);
    double norm = 0.0;
    double peak = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double v = z[static_cast<std::size_t>(j) * n + i];
      psi[i + 1] = v;
      norm += v * v;
      peak = std::max(peak, std::abs(v));
    }
    // Fix the sign: the first appreciable lobe is positive.
    double sign = 1.0;
    for (double v : psi) {
      if (std::abs(v) > 1e-3 * peak) {
        sign = v > 0.0 ? 1.0 : -1.0;
        break;
      }
    }
    const double scale = sign / std::sqrt(norm * h);
    for (double& v : psi) v *= scale;
    out.orbitals.push_back(std::move(psi));
  }
  return out;
}

void check_boundary(const RawSolution& raw, const char* what) {
  for (std::size_t j = 0; j < raw.orbitals.size(); ++j) {
    const auto& psi = raw.orbitals[j];
    const std::size_t edge = std::max<std::size_t>(2, psi.size() / 100);
    double peak = 0.0;
    for (double v : psi) peak = std::max(peak, std::abs(v));
    double tail = 0.0;
    for (std::size_t i = 0; i < edge; ++i) {
      tail = std::max({tail, std::abs(psi[i]), std::abs(psi[psi.size() - 1 - i])});
    }
    if (tail > 1e-8 * peak) {
      throw GridTooSmall(std::string(what) + ": orbital " + std::to_string(j) +
                         " is not negligible at the grid boundary (" + std::to_string(tail / peak) + " of peak)");
    }
  }
}

}  // namespace

GridSpec auto_grid(const PotentialModel& pot, double hbar, double mass, double energy) {
  const TurningGeometry g = turning_points(pot, energy);
  auto margin = [&](Side side) {
    double d = 0.1 * pot.length_scale();
    for (int i = 0; i < 200; ++i) {
      const double x = side == Side::Left ? g.x_minus - d : g.x_plus + d;
      if (action_from(pot, g, side, x, mass) >= 25.0 * hbar) return d;
      d *= 1.25;
    }
    throw GridTooSmall("auto_grid: forbidden action never reaches 25 hbar");
  };
  GridSpec spec;
  spec.lo = g.x_minus - margin(Side::Left);
  spec.hi = g.x_plus + margin(Side::Right);
  // Pad so the band scanned by the boundary check (outer 1% of the grid)
  // lies beyond the 25 hbar points even when one margin dominates the width.
  const double pad = 0.02 * (spec.hi - spec.lo);
  spec.lo -= pad;
  spec.hi += pad;
  const double p_max = std::sqrt(2.0 * mass * (energy - pot.vmin_value()));
  const double h = 0.02 * hbar / p_max;
  spec.points = static_cast<std::size_t>(std::ceil((spec.hi - spec.lo) / h)) + 1;
  spec.points = std::clamp<std::size_t>(spec.points, 401, 200001);
  return spec;
}

EigenSolution solve_schrodinger(const PotentialModel& pot, double hbar, double mass, const GridSpec& grid,
                                int n_levels) {
  if (n_levels < 1) throw std::invalid_argument("solve_schrodinger: need at least one level");
  if (grid.points < static_cast<std::size_t>(n_levels) + 8 || !(grid.hi > grid.lo)) {
    throw GridTooSmall("solve_schrodinger: grid has too few points for the requested levels");
  }
  const std::size_t p1 = grid.points;
  const std::size_t p2 = 2 * p1 - 1;
  const std::size_t p4 = 2 * p2 - 1;
  const RawSolution coarse = solve_fd(pot, hbar, mass, grid.lo, grid.hi, p1, n_levels);
  const RawSolution half = solve_fd(pot, hbar, mass, grid.lo, grid.hi, p2, n_levels);
  const RawSolution quarter = solve_fd(pot, hbar, mass, grid.lo, grid.hi, p4, n_levels);
  // Levels above the binding limit are box states; report that before the
  // boundary check they would also fail.
  for (int j = 0; j < n_levels; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    const double e = (4.0 * quarter.energies[uj] - half.energies[uj]) / 3.0;
    if (!(e < pot.sup_value())) {
      throw ContinuumReached("solve_schrodinger: level " + std::to_string(j) + " at E=" + std::to_string(e) +
                             " is not below the binding limit");
    }
  }
  check_boundary(quarter, "solve_schrodinger");

  EigenSolution sol;
  sol.hbar = hbar;
  sol.mass = mass;
  sol.grid = numerics::linspace(grid.lo, grid.hi, p1);
  const double h = grid.spacing();
  for (int j = 0; j < n_levels; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    const double e1 = (4.0 * half.energies[uj] - coarse.energies[uj]) / 3.0;
    const double e2 = (4.0 * quarter.energies[uj] - half.energies[uj]) / 3.0;
    sol.energies.push_back(e2);
    sol.richardson_shift = std::max(sol.richardson_shift, std::abs(e2 - e1));
    std::vector<double> psi(p1);
    for (std::size_t i = 0; i < p1; ++i) {
      psi[i] = (4.0 * quarter.orbitals[uj][4 * i] - half.orbitals[uj][2 * i]) / 3.0;
    }
    double norm = 0.0;
    for (double v : psi) norm += v * v;
    const double scale = 1.0 / std::sqrt(norm * h);
    for (double& v : psi) v *= scale;
    sol.orbitals.push_back(std::move(psi));
  }
  return sol;
}

DensityProfile density_exact(const EigenSolution& sol, int n_particles) {
  if (n_particles < 1 || static_cast<std::size_t>(n_particles) > sol.orbitals.size()) {
    throw std::invalid_argument("density_exact: N exceeds the computed levels");
  }
  DensityProfile out;
  out.method = Method::Exact;
  out.quantity = Quantity::Density;
  out.xs = sol.grid;
  out.values.assign(sol.grid.size(), 0.0);
  for (int j = 0; j < n_particles; ++j) {
    const auto& psi = sol.orbitals[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < psi.size(); ++i) out.values[i] += psi[i] * psi[i];
  }
  return out;
}

DensityProfile ked_exact(const EigenSolution& sol, const PotentialModel& pot, int n_particles) {
  if (n_particles < 1 || static_cast<std::size_t>(n_particles) > sol.orbitals.size()) {
    throw std::invalid_argument("ked_exact: N exceeds the computed levels");
  }
  DensityProfile out;
  out.method = Method::Exact;
  out.quantity = Quantity::Ked;
  out.xs = sol.grid;
  out.values.assign(sol.grid.size(), 0.0);
  for (std::size_t i = 0; i < sol.grid.size(); ++i) {
    const double v = pot.value(sol.grid[i]);
    for (int j = 0; j < n_particles; ++j) {
      const double psi = sol.orbitals[static_cast<std::size_t>(j)][i];
      out.values[i] += (sol.energies[static_cast<std::size_t>(j)] - v) * psi * psi;
    }
  }
  return out;
}

double kinetic_total_laplacian(const EigenSolution& sol, int n_particles) {
  const double h = sol.grid[1] - sol.grid[0];
  double total = 0.0;
  for (int j = 0; j < n_particles; ++j) {
    const auto& psi = sol.orbitals[static_cast<std::size_t>(j)];
    // Fourth-order five-point second derivative; orbitals vanish at the ends.
    for (std::size_t i = 2; i + 2 < psi.size(); ++i) {
      const double d2 =
          (-psi[i + 2] + 16.0 * psi[i + 1] - 30.0 * psi[i] + 16.0 * psi[i - 1] - psi[i - 2]) / (12.0 * h * h);
      total += psi[i] * d2 * h;
    }
  }
  return -sol.hbar * sol.hbar / (2.0 * sol.mass) * total;
}

ExactOracle::ExactOracle(const QuantumSystem& sys)
    : ExactOracle(sys, auto_grid(sys.potential, sys.hbar, sys.mass, sys.fermi_energy)) {}

ExactOracle::ExactOracle(const QuantumSystem& sys, const GridSpec& grid)
    : solution_(solve_schrodinger(sys.potential, sys.hbar, sys.mass, grid, sys.n_particles)) {
  density_ = density_exact(solution_, sys.n_particles).values;
  ked_ = ked_exact(solution_, sys.potential, sys.n_particles).values;
}

double ExactOracle::density(double x) const {
  const auto& g = solution_.grid;
  return numerics::cubic_interpolate(g.front(), g[1] - g[0], density_, x);
}

double ExactOracle::ked(double x) const {
  const auto& g = solution_.grid;
  return numerics::cubic_interpolate(g.front(), g[1] - g[0], ked_, x);
}

double sho_density_closed(int n_particles, double x) {
  if (n_particles < 1) throw std::invalid_argument("sho_density_closed: N must be positive");
  // Hermite functions psi_0..psi_N by the normalised three-term recurrence.
  double prev = 0.0;
  double cur = std::exp(-0.5 * x * x) / std::sqrt(std::sqrt(std::numbers::pi));
  for (int n = 0; n < n_particles; ++n) {
    const double next = std::sqrt(2.0 / (n + 1)) * x * cur - std::sqrt(static_cast<double>(n) / (n + 1)) * prev;
    prev = cur;
    cur = next;
  }
  const double psi_n = cur;
  const double dpsi_n = std::sqrt(2.0 * n_particles) * prev - x * psi_n;
  return 0.5 * dpsi_n * dpsi_n + 0.5 * (2.0 * n_particles - x * x) * psi_n * psi_n;
}

LangerSum::LangerSum(const QuantumSystem& sys) : sys_(sys) {
  for (int j = 0; j < sys.n_particles; ++j) {
    orbits_.push_back(langer_orbit(sys, wkb_energy(sys.potential, sys.hbar, j, sys.mass)));
  }
}

double LangerSum::density(double x) const {
  double sum = 0.0;
  for (const auto& o : orbits_) {
    const double phi = langer_wavefunction(sys_, o, x);
    sum += phi * phi;
  }
  return sum;
}

double LangerSum::ked(double x) const {
  const double v = sys_.potential.value(x);
  double sum = 0.0;
  for (const auto& o : orbits_) {
    const double phi = langer_wavefunction(sys_, o, x);
    sum += (o.energy - v) * phi * phi;
  }
  return sum;
}

double langer_sum_density(const QuantumSystem& sys, double x) { return LangerSum(sys).density(x); }

}  // namespace fermi1d
