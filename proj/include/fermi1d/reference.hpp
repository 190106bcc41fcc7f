#pragma once

#include <cstddef>
#include <vector>

#include "fermi1d/langer.hpp"
#include "fermi1d/potential.hpp"
#include "fermi1d/profile.hpp"
#include "fermi1d/quantize.hpp"

namespace fermi1d {

/// Uniform grid [lo, hi] with `points` nodes; the end nodes carry the
/// Dirichlet condition psi = 0.
struct GridSpec {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t points = 0;

  double spacing() const { return (hi - lo) / static_cast<double>(points - 1); }
};

/// Lowest levels of the finite-difference Hamiltonian. Orbitals are sampled
/// on `grid` and normalised with the trapezoid rule.
struct EigenSolution {
  std::vector<double> grid;
  std::vector<double> energies;
  std::vector<std::vector<double>> orbitals;
  double hbar = 1.0;
  double mass = 1.0;
  /// Largest energy change between the extrapolations from (h, h/2) and
  /// (h/2, h/4); an estimate of the remaining discretisation error.
  double richardson_shift = 0.0;
};

/// Grid reaching 25 hbar of forbidden action beyond both turning points at
/// `energy`, padded by 2% of its width on each side, with spacing
/// 0.02 hbar / p_max.
GridSpec auto_grid(const PotentialModel& pot, double hbar, double mass, double energy);

/// Three-point finite differences solved at spacings h, h/2, h/4 and
/// Richardson-extrapolated. Throws GridTooSmall when an orbital is not
/// negligible (1e-8 of its peak) in the outer 1% of the grid, and
/// ContinuumReached when a level is not below the binding limit.
EigenSolution solve_schrodinger(const PotentialModel& pot, double hbar, double mass,
                                const GridSpec& grid, int n_levels);

/// sum_{i<N} |psi_i|^2 on the solution grid.
DensityProfile density_exact(const EigenSolution& sol, int n_particles);
/// sum_{i<N} (E_i - v) |psi_i|^2 on the solution grid.
DensityProfile ked_exact(const EigenSolution& sol, const PotentialModel& pot, int n_particles);
/// -(hbar^2/2m) sum_{i<N} integral psi_i psi_i'' (five-point second differences).
double kinetic_total_laplacian(const EigenSolution& sol, int n_particles);

/// Exact density and KED of a system, interpolated (local cubics) to any x;
/// zero outside the solver grid.
class ExactOracle {
 public:
  explicit ExactOracle(const QuantumSystem& sys);
  ExactOracle(const QuantumSystem& sys, const GridSpec& grid);

  double density(double x) const;
  double ked(double x) const;
  const EigenSolution& solution() const { return solution_; }

 private:
  EigenSolution solution_;
  std::vector<double> density_;
  std::vector<double> ked_;
};

/// Closed form of the first N harmonic-oscillator orbitals' density
/// (hbar = m = omega = 1): (psi_N'^2 + (2N - x^2) psi_N^2) / 2.
double sho_density_closed(int n_particles, double x);

/// Sum of squared Langer orbitals at the WKB energies E(j), j < N.
class LangerSum {
 public:
  explicit LangerSum(const QuantumSystem& sys);
  double density(double x) const;
  /// sum (E_j - v) phi_j^2
  double ked(double x) const;

 private:
  QuantumSystem sys_;
  std::vector<LangerOrbit> orbits_;
};

double langer_sum_density(const QuantumSystem& sys, double x);

}  // namespace fermi1d
